"""Build-time generator for the embedded coefficient tables.

Run ``python -m incgamneg.gencoeffs`` to rewrite ``_coeffs.py``.  Everything is
done in exact rational arithmetic with :class:`fractions.Fraction`; the runtime
package never imports this module.

Four tables are produced:

* ``d_n``: Maclaurin coefficients of ``eta/(lambda-1)`` in powers of ``eta``,
  where ``eta**2/2 = lambda - 1 - ln(lambda)``.  They follow from reverting
  the map with the ODE ``(lambda-1) dlambda/deta = eta*lambda``.
* ``gamma_n``: coefficients of ``1/Gamma*(a) ~ sum gamma_n / a**n``.
* ``C_n``: closed forms ``C_n = P_n(mu)/mu**(2n+1) + s_n/eta**(2n+1)`` with
  ``mu = lambda - 1``, from ``eta*C_n = C_{n-1}' + gamma_n*eta/mu``.  Because
  ``d/deta g(mu) = g'(mu)*eta*(1+mu)/mu`` the mu-part never mixes with eta.
* the same numerators ``P_n`` re-expanded in powers of ``lambda``.
"""

from __future__ import annotations

import hashlib
import sys
from fractions import Fraction
from math import comb
from pathlib import Path

N_D = 64
N_GAMMA = 26
N_C = 26


def lambda_minus_one_series(n: int) -> list[Fraction]:
    """Coefficients c_k (k = 0..n) of lambda - 1 = sum c_k eta**k."""
    c = [Fraction(0), Fraction(1)]
    for m in range(2, n + 1):
        acc = c[m - 1]
        for i in range(2, m):
            acc -= (m + 1 - i) * c[i] * c[m + 1 - i]
        c.append(acc / (m + 1))
    return c[: n + 1]


def d_coefficients(n: int) -> list[Fraction]:
    """d_0..d_{n-1} of eta/(lambda-1)."""
    c = lambda_minus_one_series(n + 1)
    d = [Fraction(1)]
    for k in range(1, n):
        d.append(-sum(c[j + 1] * d[k - j] for j in range(1, k + 1)))
    return d


def bernoulli(n: int) -> list[Fraction]:
    b = [Fraction(1)]
    for m in range(1, n + 1):
        b.append(-sum(comb(m + 1, k) * b[k] for k in range(m)) / (m + 1))
    return b


def recip_gamma_star_coefficients(n: int) -> list[Fraction]:
    """gamma_0..gamma_{n-1} with 1/Gamma*(a) ~ sum gamma_k a**-k."""
    b = bernoulli(2 * n + 2)
    # ln Gamma*(a) = sum_k B_2k / (2k(2k-1)) a**(1-2k); we need exp(-that).
    h = [Fraction(0)] * n
    for k in range(1, n):
        p = 2 * k - 1
        if p < n:
            h[p] = -b[2 * k] / (2 * k * (2 * k - 1))
    g = [Fraction(1)]
    for m in range(1, n):
        g.append(sum(k * h[k] * g[m - k] for k in range(1, m + 1)) / m)
    return g


def c_polynomials(n: int, gam: list[Fraction]) -> list[list[Fraction]]:
    """Numerators P_0..P_{n-1} (ascending powers of mu) of the mu-part of C_k."""
    polys = [[Fraction(1)]]
    for k in range(n - 1):
        p = polys[-1]
        # q = mu*P' - (2k+1)*P
        q = [(j - (2 * k + 1)) * coef for j, coef in enumerate(p)]
        nxt = [Fraction(0)] * (len(q) + 2)
        for j, coef in enumerate(q):
            nxt[j] += coef
            nxt[j + 1] += coef
        deg = 2 * k + 2
        if len(nxt) <= deg:
            nxt.extend([Fraction(0)] * (deg + 1 - len(nxt)))
        nxt[deg] += gam[k + 1]
        while len(nxt) > deg + 1 and nxt[-1] == 0:
            nxt.pop()
        polys.append(nxt)
    return polys


def to_lambda_form(p: list[Fraction]) -> list[Fraction]:
    """Re-expand a polynomial in mu = lambda - 1 in powers of lambda.

    Horner in mu cancels badly for lambda near 0; in lambda it does not.
    """
    q = [Fraction(0)] * len(p)
    for j, coef in enumerate(p):
        for i in range(j + 1):
            q[i] += coef * comb(j, i) * (-1) ** (j - i)
    return q


def eta_part(k: int) -> Fraction:
    """Coefficient s_k of eta**-(2k+1) in C_k: (-1)**(k+1) (2k-1)!!."""
    dfact = 1
    for j in range(1, 2 * k, 2):
        dfact *= j
    return Fraction((-1) ** (k + 1) * dfact)


def _rat(f: Fraction) -> tuple[int, int]:
    return f.numerator, f.denominator


def build_tables() -> dict:
    gam = recip_gamma_star_coefficients(N_GAMMA)
    d = d_coefficients(N_D)
    polys = c_polynomials(N_C, gam)
    c_records = []
    lam_records = []
    for k, p in enumerate(polys):
        lam_records.append(
            (k, tuple((j, *_rat(c)) for j, c in enumerate(to_lambda_form(p)) if c != 0))
        )
        mu_terms = tuple(
            (j - (2 * k + 1), *_rat(coef)) for j, coef in enumerate(p) if coef != 0
        )
        c_records.append((k, mu_terms, ((2 * k + 1, *_rat(eta_part(k))),)))
    return {
        "D_COEFFS": tuple(_rat(x) for x in d),
        "GAMMA_RECIP": tuple(_rat(x) for x in gam),
        "C_RECORDS": tuple(c_records),
        "C_LAMBDA": tuple(lam_records),
    }


def payload_digest(tables: dict) -> str:
    names = ("D_COEFFS", "GAMMA_RECIP", "C_RECORDS", "C_LAMBDA")
    text = repr(tuple(tables[k] for k in names))
    return hashlib.sha256(text.encode()).hexdigest()


def render(tables: dict) -> str:
    lines = [
        "# Generated by incgamneg.gencoeffs; do not edit by hand.",
        f"# sha256: {payload_digest(tables)}",
        "# D_COEFFS[n] = (num, den) of d_n in eta/(lambda-1) = sum d_n eta**n.",
        "# GAMMA_RECIP[n] = (num, den) of gamma_n in 1/Gamma*(a) ~ sum gamma_n a**-n.",
        "# C_RECORDS: (n, ((p, num, den), ...), ((q, num, den),)) meaning",
        "#   C_n = sum num/den * (lambda-1)**p + sum num/den * eta**-q.",
        "# C_LAMBDA: (n, ((j, num, den), ...)) giving the same mu-part as",
        "#   (sum num/den * lambda**j) / (lambda-1)**(2n+1).",
        "",
    ]
    for name in ("D_COEFFS", "GAMMA_RECIP"):
        lines.append(f"{name} = (")
        for num, den in tables[name]:
            lines.append(f"    ({num}, {den}),")
        lines.append(")")
        lines.append("")
    lines.append("C_RECORDS = (")
    for k, mu_terms, eta_terms in tables["C_RECORDS"]:
        lines.append(f"    ({k}, (")
        for term in mu_terms:
            lines.append(f"        {term!r},")
        lines.append(f"    ), {eta_terms!r}),")
    lines.append(")")
    lines.append("")
    lines.append("C_LAMBDA = (")
    for k, terms in tables["C_LAMBDA"]:
        lines.append(f"    ({k}, (")
        for term in terms:
            lines.append(f"        {term!r},")
        lines.append("    )),")
    lines.append(")")
    lines.append("")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    out = Path(argv[0]) if argv else Path(__file__).with_name("_coeffs.py")
    out.write_text(render(build_tables()))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
