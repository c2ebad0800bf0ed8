"""Frozen high-precision reference values for the test suite (mpmath, 50 digits).

Writes tests/oracles/gamma.json and tests/oracles/zeta.json. Rerun only when
the grids change; the outputs are committed.
"""
import json
import pathlib

from mpmath import mp, mpf, gammainc, gamma, zeta, altzeta, dirichlet, sqrt, isinf

mp.dps = 50
OUT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "oracles"

BETA = [0, 1, 0, -1]


def f(v):
    return float(v)


def is_nonpos_int(a):
    return a <= 0 and a == int(a)


def gamma_row(a, x):
    a = mpf(a)
    x = mpf(x)
    up = gammainc(a, x)
    row = {"a": f(a), "x": f(x), "upper": f(up)}
    if is_nonpos_int(a):
        row["Q"] = 0.0
        row["gamma_star"] = f(x ** (-a))
    else:
        g = gamma(a)
        q = up / g
        row["Q"] = f(q)
        if a > 0:
            p = gammainc(a, 0, x) / g
            row["P"] = f(p)
            row["gamma_star"] = f(x ** (-a) * p)
        else:
            row["gamma_star"] = f(x ** (-a) * (1 - q))
    return row


def gamma_tables():
    a_vals = [-10.3, -7.5, -5.0, -3.7, -2.5, -1.0, -0.75, -0.5, -0.3, 0.0, 0.1, 0.5, 1.0,
              1.5, 2.5, 5.0, 9.5, 12.0, 15.3, 20.0, 30.0, 45.0, 60.0, 100.0]
    x_vals = [0.01, 0.1, 0.5, 1.0, 1.4, 1.6, 2.0, 3.0, 5.0, 8.0, 10.0, 15.0, 20.0, 30.0, 50.0,
              80.0, 120.0]
    grid = []
    for a in a_vals:
        for x in x_vals:
            row = gamma_row(a, x)
            vals = [v for k, v in row.items() if k not in ("a", "x")]
            if all(v == 0.0 or 1e-280 < abs(v) < 1e280 for v in vals):
                grid.append(row)
    # dense sweep of the negative-a recurrence region
    recurrence = []
    a = mpf(-10)
    while a <= mpf(-0.5):
        for x in [0.001, 0.05, 0.2, 0.5, 0.9, 1.2, 1.49]:
            recurrence.append(gamma_row(a, x))
        a += mpf("0.37")
    return {"grid": grid, "recurrence": recurrence}


def beta(s):
    return dirichlet(s, BETA)


def lam(s):
    return (1 - mpf(2) ** (-s)) * zeta(s)


def case_value(name, nu):
    h = nu / 2
    if name == "S1":
        return 2 * zeta(nu, mpf(1) / 2)
    if name == "S2a":
        return 2 * (1 - mpf(2) ** (-h) + mpf(2) ** (1 - nu)) * zeta(h) * beta(h)
    if name == "S2b":
        return mpf(3) ** (1 - h) * 2 * zeta(h) * (zeta(h, mpf(1) / 3) - zeta(h, mpf(2) / 3))
    if name == "S3a":
        return mpf(4) ** h * beta(nu - 1)
    if name == "S3b":
        return mpf(3) ** (-h) * beta(nu - 1)
    if name == "S3c":
        return mpf(2) ** (1 - h) * beta(nu - 1)
    if name == "S4":
        return mpf(2) ** nu * (beta(h) * beta(h - 1) + lam(h) * lam(h - 1))
    if name == "S6":
        return 4 * beta(h - 2) * altzeta(h)
    if name == "S8":
        return -16 * altzeta(h - 3) * zeta(h)
    raise ValueError(name)


def zeta_tables():
    s_vals = [mpf(-11.5) + mpf("0.5") * j + mpf(2) ** -15 for j in range(47)]
    hurwitz = []
    for s in s_vals:
        for a in [mpf(1) / 4, mpf(1) / 3, mpf(1) / 2, mpf(2) / 3, mpf(3) / 4, mpf(1), mpf("2.7")]:
            hurwitz.append({"s": f(s), "a": f(a), "value": f(zeta(s, a))})
    dirichlet_rows = []
    for s in s_vals + [mpf(1), mpf(2), mpf(3), mpf(-3), mpf(-5)]:
        row = {"s": f(s), "eta": f(altzeta(s)), "beta": f(beta(s))}
        if s != 1:
            row["lambda"] = f(lam(s))
            row["riemann"] = f(zeta(s))
        dirichlet_rows.append(row)
    cases = []
    names = ["S1", "S2a", "S2b", "S3a", "S3b", "S3c", "S4", "S6", "S8"]
    for j in range(101):
        nu = mpf(-12.5) + mpf("0.25") * j + mpf(2) ** -15
        for name in names:
            if name == "S8" and j % 4:
                continue
            v = case_value(name, nu)
            if not isinf(v):
                cases.append({"case": name, "nu": f(nu), "value": f(v)})
    return {"hurwitz": hurwitz, "dirichlet": dirichlet_rows, "cases": cases}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / "gamma.json").write_text(json.dumps(gamma_tables(), indent=1) + "\n")
    (OUT / "zeta.json").write_text(json.dumps(zeta_tables(), indent=1) + "\n")


if __name__ == "__main__":
    main()
