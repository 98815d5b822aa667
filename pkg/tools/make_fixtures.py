#!/usr/bin/env python3
"""Regenerate the bundled b-file fixtures that this repository can compute
for itself.

* av4123_4231_4312.bfile - counts of permutations avoiding all of
  4123, 4231, 4312, by exhaustive enumeration (n <= 11; a few seconds with
  the compiled kernel, considerably longer with the pure fallback).

The av1324 fixture is NOT regenerated here: its terms beyond n = 9 come from
published large-scale enumerations that are far outside desk-scale brute
force (n = 11 is already ~40M permutations).  The bundled prefix was
validated against this package's oracle (n <= 9) and by the exact
positivity/monotonicity battery in tests/test_cfrac.py.
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from momentcert.sequences import brute_force_av_class  # noqa: E402

DATA = pathlib.Path(__file__).resolve().parent.parent / "src" / "momentcert" / "data"


def main() -> None:
    seq = brute_force_av_class([(4, 1, 2, 3), (4, 2, 3, 1), (4, 3, 1, 2)], 11)
    lines = ["# Permutations avoiding {4123, 4231, 4312}, by exhaustive enumeration",
             "# (regenerate with tools/make_fixtures.py)."]
    lines += [f"{n} {int(v)}" for n, v in enumerate(seq.terms)]
    out = DATA / "av4123_4231_4312.bfile"
    out.write_text("\n".join(lines) + "\n", encoding="ascii")
    print(f"wrote {out}: {seq.as_ints()}")


if __name__ == "__main__":
    main()
