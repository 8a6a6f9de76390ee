#!/usr/bin/env python3
"""Print successor numerals, optionally wrapped in a query template.

    numeral.py 101                      -> s(s(...s(0)...))
    numeral.py 101 'p(@I, {})'          -> p(@I, s(s(...)))
"""
import sys


def numeral(n, zero="0", succ="s"):
    return f"{succ}(" * n + zero + ")" * n


def main(argv):
    if len(argv) < 2:
        print(__doc__.strip(), file=sys.stderr)
        return 2
    term = numeral(int(argv[1]))
    print(argv[2].format(term) if len(argv) > 2 else term)
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
