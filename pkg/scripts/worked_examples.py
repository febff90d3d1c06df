"""Print the decompositions and set statistics behind the published worked examples."""

from cliffstat.ssgs import decompose, decompose_decimal, format_scaled_root
from cliffstat.stats import column_variances, summarize
from cliffstat.signal import moving_windows

SETS = {
    "set 1": [101, 118, 99, 131, 140, 141, 109, 121, 122, 110],
    "set 2": [112, 107, 103, 135, 131, 130, 123, 109, 130, 112],
}
TABLE_1 = {
    "column 1": [128, 128, 145, 145, 171],
    "column 2 (as printed)": [156, 107, 127, 195, 182],
}


def squares(roots, k=0):
    return " + ".join(f"{format_scaled_root(r, k)}^2" for r in roots) or "0"


def main():
    for x in (91, 192, 999998, 191):
        print(f"{x} = {squares(decompose(x).roots)}")
    for text in ("12.3", "12.3000"):
        d = decompose_decimal(text)
        print(f"{text} = {squares(d.roots, d.scale_k)}  (numerator {d.integer_part.value}, k={d.scale_k})")
    print()

    for name, values in SETS.items():
        s = summarize(values)
        var = ", ".join(f"{float(v):.2f}" for v in column_variances(values))
        print(f"{name}: total {sum(values)}  AM {float(s.am):.4f}  NM {float(s.new_mean):.4f}  "
              f"lambda {float(s.lam):.4f}  SD {s.sd:.4f}  NewSD {s.new_sd:.4f}")
        print(f"  column variances: {var}")
    print()

    for name, values in TABLE_1.items():
        (r,) = moving_windows(values, len(values))
        print(f"table 1 {name}: total {r.total}  AM {r.am:.2f}  NMA {r.nma:.2f}  "
              f"range {r.range}  SD {r.sd:.2f}  NewSD {r.new_sd:.2f}")


if __name__ == "__main__":
    main()
