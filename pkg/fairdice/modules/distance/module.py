from DiceModule import DiceModule


module = DiceModule("DISTANCE")
