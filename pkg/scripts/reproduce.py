"""Print every headline number this package can reproduce, with a check mark.

    python scripts/reproduce.py
"""

import sys
from dataclasses import dataclass, field
from math import gcd

from turkshead.braid import build_thk
from turkshead.coloring import hk_verify, thk_m2_coefficients
from turkshead.determinant import det_closed_form_m3, knot_determinant, trig_count
from turkshead.graphs import build_checkerboard, build_wheel, spanning_tree_count
from turkshead.numbertheory import is_prime, pell_prime_scan
from turkshead.sequences import delannoy_row, lucas, pell
from turkshead.transfer import G, build_Am, charpoly, dm, roots_analysis, square_structure


@dataclass
class Report:
    rows: list = field(default_factory=list)

    def add(self, label, value, ok):
        self.rows.append((label, str(value), bool(ok)))

    def show(self):
        width = max(len(r[0]) for r in self.rows)
        for label, value, ok in self.rows:
            print(f"{'ok ' if ok else 'BAD'}  {label.ljust(width)}  {value}")
        return all(ok for *_, ok in self.rows)


def main():
    r = Report()
    dets = [knot_determinant(build_thk(m, 2)).value for m in range(3, 16, 2)]
    r.add("det THK(m,2), odd m 3..15", dets, dets == [pell(m) for m in range(3, 16, 2)])
    H = [spanning_tree_count(build_checkerboard(build_thk(k, 2))) for k in (3, 4)]
    r.add("T(H_3), T(H_4)", H, H == [5, 12])
    m3 = [knot_determinant(build_thk(3, n)).value for n in range(2, 9) if n % 3]
    r.add("det THK(3,n) vs L_2n - 2", m3,
          m3 == [det_closed_form_m3(n) for n in range(2, 9) if n % 3])
    r.add("wheel(5) spanning trees", spanning_tree_count(build_wheel(5)),
          spanning_tree_count(build_wheel(5)) == lucas(5) ** 2)
    trig = {(m, n): trig_count(m, n) for m in (4, 6) for n in (3, 5, 7) if gcd(m, n) == 1}
    r.add("trig product, m in {4,6}", trig,
          all(v == knot_determinant(build_thk(*k)).value and v % k[1] == 0
              for k, v in trig.items()))
    S = thk_m2_coefficients(9).S
    r.add("S_1..S_7", S, S[:4] == (1, 3, 8, 20))
    hk = {m: hk_verify(build_thk(m, 2), pell(m)).heterogeneous for m in (3, 5, 11, 13)}
    r.add("HK for P_m prime, m in {3,5,11,13}", hk, all(hk.values()))
    r.add("g_5", charpoly(build_Am(5)), str(charpoly(build_Am(5))) == "1 -8 20 -20 8 -1")
    r.add("d_7 vs Delannoy row 6", dm(7),
          [abs(c) for c in dm(7).coeffs] == list(delannoy_row(6)))
    s3 = roots_analysis(3, which="g").smallest
    s4 = roots_analysis(4, which="g").smallest
    r.add("s_3, s_4", f"{float(s3):.6f}, {float(s4):.6f}",
          abs(s3 - 0.381966) < 1e-6 and abs(s4 - 0.267949) < 1e-6)
    cert = all(roots_analysis(m).certified for m in range(3, 16))
    r.add("d_m roots real positive, m 3..15", "certified" if cert else "not certified", cert)
    g = {(m, n): G(m, n).value for m in (5, 7) for n in (2, 3, 4) if gcd(m, n) == 1}
    r.add("G(m,n) = det samples", g,
          all(v == knot_determinant(build_thk(*k)).value for k, v in g.items()))
    sq = square_structure(5, 4)
    r.add("G(5,4) = G(5,2) * root^2", f"{sq.value} = {sq.cofactor} * {sq.root}^2", sq.holds)
    scan = pell_prime_scan(100)
    r.add("Pell-prime indices <= 100", scan, all(is_prime(m).is_prime for m in scan))
    return 0 if r.show() else 1


if __name__ == "__main__":
    sys.exit(main())
