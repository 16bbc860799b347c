import re
import datetime

import iso8601
import pytz

from core.errors import InvalidInputError


def prop_tabulate(prop_list, value_list):
    """
    One `prop: value` line per pair, with the props right-aligned on their colons.

    Parameters
    ----------
    prop_list: Sequence[str]
        Short names for the left column.
    value_list: Sequence[Any]
        Matching values, passed through `str`.

    Returns: str
    """
    width = max((len(prop) for prop in prop_list), default=0)
    return "".join("{}: {}\n".format(prop.rjust(width), value) for prop, value in zip(prop_list, value_list))


def tabulate_rows(header, rows):
    """
    Left-aligned plain text table with a header rule.

    Parameters
    ----------
    header: Sequence[str]
        Column titles.
    rows: Sequence[Sequence[Any]]
        Table body, each cell is passed through `str`.

    Returns: str
    """
    table = [[str(cell) for cell in header]] + [[str(cell) for cell in row] for row in rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]

    def _line(cells):
        return "  ".join(cell.ljust(width) for cell, width in zip(cells, widths)).rstrip()

    lines = [_line(table[0]), "  ".join("-" * width for width in widths)]
    lines.extend(_line(row) for row in table[1:])
    return "\n".join(lines)


_range_item = re.compile(r'^(\d+)(?:\s*-\s*(\d+))?$')


def parse_ranges(ranges_str, max_range=1000):
    """
    Parse a comma separated selection of numbers and ranges such as `1, 5, 6-9`.

    Returns: List[int]
    """
    numbers = []
    for item in (item.strip() for item in ranges_str.split(',')):
        if not item:
            continue
        match = _range_item.match(item)
        if match is None:
            raise InvalidInputError(
                "Couldn't parse the selection `{}`! "
                "Please provide comma separated numbers and ranges, e.g. `1, 5, 6-9`.".format(ranges_str)
            )
        start = int(match.group(1))
        end = int(match.group(2)) if match.group(2) is not None else start
        if end - start > max_range:
            raise InvalidInputError("The range `{}` is too large!".format(item))
        numbers.extend(range(start, end + 1))
    return numbers


def parse_groups(groups_str, group_separator=';'):
    """
    Parse `;` separated groups of numbers and ranges, e.g. `1,2;3-4`, into one integer list per group.
    A trailing separator is ignored.
    """
    groups = groups_str.strip().rstrip(group_separator).split(group_separator)
    if any(not group.strip() for group in groups):
        raise InvalidInputError(
            "Couldn't parse the groups `{}`! "
            "Please separate groups with `;` and numbers with `,`, e.g. `1,2;3,4`.".format(groups_str)
        )
    return [parse_ranges(group) for group in groups]


def utc_now():
    """
    Return the current timezone-aware utc timestamp.
    """
    return pytz.utc.localize(datetime.datetime.utcnow())


def parse_timestamp(timestr):
    """
    Parse an ISO 8601 timestamp into an aware utc datetime, or `None` if it is not a timestamp.
    """
    try:
        return iso8601.parse_date(timestr).astimezone(pytz.utc)
    except (iso8601.ParseError, TypeError, AttributeError):
        return None


class DotDict(dict):
    """
    Dict-type allowing dot access to keys.
    """
    __getattr__ = dict.get
    __setattr__ = dict.__setitem__
    __delattr__ = dict.__delitem__
