from itertools import permutations


# Above this many dice, orderings are matched greedily instead of exhaustively
EXHAUSTIVE_MATCH_LIMIT = 7


def check_symmetry(dice, tol):
    """
    Whether each die is palindromic, weight(i) == weight(n + 1 - i) within `tol`.

    Returns: Tuple[bool, ...]
        One flag per die.
    """
    return tuple(
        all(abs(w - die.weights[-1 - i]) <= tol for i, w in enumerate(die.weights))
        for die in dice
    )


def _die_distance(a, b):
    return max(abs(x - y) for x, y in zip(a.weights, b.weights))


def max_deviation(dice, reference):
    """
    Largest per-weight difference between two lists of dice,
    minimised over the orderings of `dice`.
    """
    dice = [die.as_float() for die in dice]
    reference = [die.as_float() for die in reference]
    if len(dice) != len(reference) or any(a.n != b.n for a, b in zip(dice, reference)):
        return float('inf')

    if len(dice) > EXHAUSTIVE_MATCH_LIMIT:
        remaining = list(range(len(dice)))
        worst = 0.0
        for ref in reference:
            index = min(remaining, key=lambda i: _die_distance(dice[i], ref))
            remaining.remove(index)
            worst = max(worst, _die_distance(dice[index], ref))
        return worst

    return min(
        max(_die_distance(dice[index], ref) for index, ref in zip(order, reference))
        for order in permutations(range(len(dice)))
    )
