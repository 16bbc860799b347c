from DiceModule import DiceModule


module = DiceModule("CLOSED_FORM")
