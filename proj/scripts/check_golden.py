#!/usr/bin/env python3
"""Verifies the frozen golden report against the reference ranking.

Deliberately independent of the C++ library: the 23 reference rows are
transcribed here by hand and every derived column is recomputed with
exact integer arithmetic (round half up at the hundredth), so a defect
in the library's rounding or aggregation cannot hide inside the golden
file it produced.

Usage: check_golden.py <path/to/fix_ils_golden.csv>
"""

import csv
import sys

# (publisher, total_items, books, chapters, total_citations, avg, non_cit_pct)
REFERENCE_ROWS = [
    ("CHANDOS PUBL", 1456, 125, 1331, 502, "0.34", 89),
    ("IOS PRESS", 760, 4, 756, 202, "0.27", 84),
    ("SPRINGER", 653, 44, 609, 353, "0.54", 81),
    ("WALTER DE GRUYTER & CO", 318, 18, 300, 87, "0.27", 88),
    ("M E SHARPE INC", 252, 15, 237, 175, "0.69", 71),
    ("BAYWOOD PUBLISHING CO INC", 154, 13, 141, 34, "0.22", 85),
    ("EMERALD GROUP PUBLISHING LIMITED", 144, 13, 131, 61, "0.42", 75),
    ("ROUTLEDGE", 101, 6, 95, 14, "0.14", 93),
    ("PALGRAVE", 100, 4, 96, 7, "0.07", 96),
    ("M I T PRESS", 47, 4, 43, 34, "0.72", 87),
    ("WOODHEAD PUBL LTD", 41, 4, 37, 10, "0.24", 90),
    ("NOVA SCIENCE PUBLISHERS INC", 28, 3, 25, 0, "0.00", 100),
    ("CAMBRIDGE UNIV PRESS", 26, 2, 24, 18, "0.69", 92),
    ("TMC ASSER PRESS", 26, 1, 25, 0, "0.00", 100),
    ("ELSEVIER", 25, 2, 23, 128, "5.12", 92),
    ("EDWARD ELGAR PUBLISHING LTD", 23, 2, 21, 31, "1.35", 91),
    ("CABI PUBLISHING C A B INT", 21, 1, 20, 50, "2.38", 48),
    ("WORLD SCIENTIFIC PUBL CO PTE LTD", 18, 1, 17, 8, "0.44", 89),
    ("UNIV ADELAIDE PRESS", 9, 1, 8, 0, "0.00", 100),
    ("UTAH STATE UNIV PRESS", 9, 1, 8, 1, "0.11", 89),
    ("CRC PRESS TAYLOR & FRANCIS GROUP", 8, 1, 7, 0, "0.00", 100),
    ("UNIV CALIFORNIA PRESS", 8, 1, 7, 27, "3.38", 75),
    ("WILFRID LAURIER UNIV PRESS", 8, 1, 7, 3, "0.38", 75),
]

HEADER = [
    "publisher",
    "total_items",
    "books",
    "chapters",
    "total_citations",
    "avg_cit",
    "non_cit_pct",
]


def half_up_hundredths(num, den):
    """round-half-up(100 * num/den) as an integer, exactly."""
    return (200 * num + den) // (2 * den)


def avg_text(citations, items):
    h = half_up_hundredths(citations, items)
    return f"{h // 100}.{h % 100:02d}"


def main():
    if len(sys.argv) != 2:
        print(__doc__.strip(), file=sys.stderr)
        return 2
    with open(sys.argv[1], newline="", encoding="utf-8") as fh:
        table = list(csv.reader(fh))

    errors = []

    def check(ok, message):
        if not ok:
            errors.append(message)

    check(len(table) == 1 + len(REFERENCE_ROWS),
          f"expected {1 + len(REFERENCE_ROWS)} lines, found {len(table)}")
    if table and table[0] != HEADER:
        errors.append(f"header mismatch: {table[0]}")

    rows = table[1:]
    for i, expected in enumerate(REFERENCE_ROWS):
        if i >= len(rows):
            break
        name, items, books, chapters, citations, avg, pct = expected
        got = rows[i]
        where = f"row {i + 1} ({name})"
        check(len(got) == 7, f"{where}: expected 7 fields, found {len(got)}")
        if len(got) != 7:
            continue
        check(got[0] == name, f"{where}: publisher is {got[0]!r}")
        check(got[1] == str(items), f"{where}: total_items {got[1]} != {items}")
        check(got[2] == str(books), f"{where}: books {got[2]} != {books}")
        check(got[3] == str(chapters), f"{where}: chapters {got[3]} != {chapters}")
        check(got[4] == str(citations), f"{where}: total_citations {got[4]} != {citations}")

        check(items == books + chapters, f"{where}: items != books + chapters in the table")
        check(avg_text(citations, items) == avg,
              f"{where}: reference avg {avg} does not follow from the counts")
        check(got[5] == avg, f"{where}: avg_cit {got[5]} != {avg}")

        # The fixture sets uncited = round-half-up(pct% of items); rounding
        # that count back to whole percents must reproduce the reference one.
        uncited = (2 * pct * items + 100) // 200
        recomputed_pct = (200 * uncited + items) // (2 * items)
        check(recomputed_pct == pct,
              f"{where}: uncited count {uncited} rounds to {recomputed_pct}%, not {pct}%")
        check(got[6] == f"{pct}%", f"{where}: non_cit_pct {got[6]} != {pct}%")

    # Ranking order: items descending, publisher ascending on ties.
    for i in range(1, len(rows)):
        prev, cur = rows[i - 1], rows[i]
        if len(prev) == 7 and len(cur) == 7:
            key_prev = (-int(prev[1]), prev[0])
            key_cur = (-int(cur[1]), cur[0])
            check(key_prev < key_cur, f"rows {i} and {i + 1} are out of ranking order")

    if errors:
        for message in errors:
            print(f"check_golden: {message}", file=sys.stderr)
        return 1
    print(f"check_golden: all {len(REFERENCE_ROWS)} rows verified")
    return 0


if __name__ == "__main__":
    sys.exit(main())
