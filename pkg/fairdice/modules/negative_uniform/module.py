from DiceModule import DiceModule


module = DiceModule("NEG_UNIFORM")
