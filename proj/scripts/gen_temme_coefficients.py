#!/usr/bin/env python3
"""Generate Taylor coefficients d[k][n] of the Temme uniform-expansion
functions c_k(eta) for Q(a, x) and write them as a C++ header.

    Q(a, x) = erfc(eta*sqrt(a/2))/2
              + exp(-a*eta^2/2)/sqrt(2*pi*a) * sum_k c_k(eta) a^-k
    eta^2/2 = lambda - 1 - ln(lambda),  lambda = x/a,  sign(eta) = sign(lambda-1)

c_0 = 1/(lambda-1) - 1/eta and c_k = c_{k-1}'(eta)/eta + r_k/(lambda-1),
where r_k cancels the pole at eta = 0. Arithmetic in 80 significant digits.
"""
import argparse

import mpmath as mp

mp.mp.dps = 80


def inv(a, n):
    # 1/a for a[0] != 0
    out = [mp.mpf(0)] * n
    out[0] = 1 / a[0]
    for k in range(1, n):
        s = mp.fsum(a[j] * out[k - j] for j in range(1, min(k, len(a) - 1) + 1))
        out[k] = -s / a[0]
    return out


def lambda_minus_one(n):
    """Coefficients of mu(eta) = lambda - 1 from mu*mu' = eta*(1 + mu)."""
    m = [mp.mpf(0)] * n
    m[1] = mp.mpf(1)
    for k in range(2, n):
        s = m[k - 1] - mp.fsum(m[i] * (k + 1 - i) * m[k + 1 - i] for i in range(2, k))
        m[k] = s / (k + 1)
    return m


def generate(kmax, nmax):
    n = nmax + 2 * kmax + 4
    mu_of_eta = lambda_minus_one(n)
    # 1/mu = (1/eta) * 1/(mu/eta)
    q = mu_of_eta[1:] + [mp.mpf(0)]
    inv_q = inv(q, n)  # inv_q[0] = 1
    c = inv_q[1:]  # c_0 = 1/mu - 1/eta
    coeffs = [c]
    for k in range(1, kmax + 1):
        prev = coeffs[-1]
        # c_{k-1}'/eta has the pole prev[1]/eta, cancelled by r/mu
        deriv_over_eta = [(m + 2) * prev[m + 2] for m in range(len(prev) - 2)]
        r = -prev[1]
        regular = [r * inv_q[m + 1] for m in range(len(deriv_over_eta))]
        coeffs.append([a + b for a, b in zip(deriv_over_eta, regular)])
    return [cc[: nmax - 2 * k] for k, cc in enumerate(coeffs)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--kmax", type=int, default=12)
    ap.add_argument("--nmax", type=int, default=60)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()
    coeffs = generate(args.kmax, args.nmax)
    lines = [
        "// Generated by scripts/gen_temme_coefficients.py; do not edit.",
        "#pragma once",
        "",
        "#include <array>",
        "",
        "namespace epstein::detail {",
        "",
    ]
    for k, cc in enumerate(coeffs):
        vals = ",\n    ".join(mp.nstr(v, 20, min_fixed=1, max_fixed=0) for v in cc)
        lines.append(f"inline constexpr std::array<double, {len(cc)}> kTemmeC{k} = {{\n    {vals}}};")
        lines.append("")
    lines.append("}  // namespace epstein::detail")
    text = "\n".join(lines) + "\n"
    if args.out == "-":
        print(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)


if __name__ == "__main__":
    main()
