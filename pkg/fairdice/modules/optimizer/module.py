from DiceModule import DiceModule


module = DiceModule("OPTIMIZER")
