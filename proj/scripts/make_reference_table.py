#!/usr/bin/env python3
"""Generate the reference table of 3-ranks of cyclic cubic class groups.

Writes rows `conductor,field_index,rk3_class_group` for every cyclic cubic
field with conductor below the bound. This is an independent implementation
(discrete-log character tables, direct evaluation of the local-norm condition
per divisor) maintained separately from the C++ library so the two can be
cross-checked against each other.

For a fully external check, regenerate the same table with PARI/GP
(polsubcyclo lists the cubic subfields of Q(zeta_f), whose conductors divide
f, so the discriminant filter keeps exactly the conductor-f fields):

    print("conductor,field_index,rk3_class_group");
    forstep(f = 7, 3999, 1,
      my(polys = polsubcyclo(f, 3), i = 0);
      if (type(polys) != "t_VEC", polys = [polys]);
      for (t = 1, #polys,
        if (nfdisc(polys[t]) == f^2,
          my(bnf = bnfinit(polys[t], 1));
          my(rk3 = #select(x -> x % 3 == 0, bnf.clgp.cyc));
          printf("%d,%d,%d\n", f, i, rk3); i++)))
"""

import argparse
import csv
import sys
from itertools import product


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def ramified_primes(f: int):
    """Sorted ramified primes if f is an admissible conductor, else None."""
    n, primes = f, []
    if n % 3 == 0:
        if n % 9 != 0 or n % 27 == 0:
            return None
        primes.append(3)
        n //= 9
    p = 2
    while p * p <= n:
        if n % p == 0:
            if n % (p * p) == 0 or p % 3 != 1:
                return None
            primes.append(p)
            n //= p
        p += 1
    if n > 1:
        if n % 3 != 1:
            return None
        primes.append(n)
    return sorted(primes) if primes else None


def primitive_root(l: int) -> int:
    # smallest generator of (Z/l)^x for prime l
    factors = []
    m = l - 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            factors.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        factors.append(m)
    for g in range(2, l):
        if all(pow(g, (l - 1) // q, l) != 1 for q in factors):
            return g
    raise AssertionError(f"no primitive root mod {l}")


def char_exponent_table(l: int):
    """table[x] = exponent of the base cubic character at x, for x coprime."""
    if l == 3:
        # order-3 character mod 9, chi(2) = omega
        table = {}
        x, ind = 1, 0
        for ind in range(6):
            table[x] = ind % 3
            x = x * 2 % 9
        return 9, table
    g = primitive_root(l)
    table = {}
    x = 1
    for ind in range(l - 1):
        table[x] = ind % 3
        x = x * g % l
    return l, table


def field_rank(primes, selectors, tables):
    """s for the field with the given character selectors."""
    r = len(primes)
    m = 0
    for exps in product(range(3), repeat=r):
        ok = True
        for i, l in enumerate(primes):
            mod_i, tab_i = tables[l]
            v = exps[i]
            total = 0
            # chi_l(b / l^v)
            for j, q in enumerate(primes):
                if j != i:
                    total += exps[j] * selectors[i] * tab_i[q % mod_i]
            # prod_{q != l} chi_q(l)^{-v}
            for j, q in enumerate(primes):
                if j != i:
                    mod_j, tab_j = tables[q]
                    total -= v * selectors[j] * tab_j[l % mod_j]
            if total % 3 != 0:
                ok = False
                break
        if ok:
            m += 1
    assert m % 3 == 0, (primes, selectors, m)
    q, s = m // 3, 0
    while q % 3 == 0:
        q //= 3
        s += 1
    assert q == 1, (primes, selectors, m)
    return s


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-conductor", type=int, default=4000,
                        help="exclusive conductor bound (default 4000)")
    parser.add_argument("--out", default="-", help="output CSV path (default stdout)")
    args = parser.parse_args()

    out = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    writer = csv.writer(out)
    writer.writerow(["conductor", "field_index", "rk3_class_group"])

    tables = {}
    for f in range(7, args.max_conductor):
        primes = ramified_primes(f)
        if primes is None:
            continue
        for l in primes:
            if l not in tables:
                assert l == 3 or is_prime(l), l
                tables[l] = char_exponent_table(l)
        r = len(primes)
        # one representative per character orbit: first selector pinned to 1
        index = 0
        for rest in product((1, 2), repeat=r - 1):
            selectors = (1,) + rest
            s = field_rank(primes, selectors, tables)
            writer.writerow([f, index, s + r - 1])
            index += 1

    if out is not sys.stdout:
        out.close()
    return 0


if __name__ == "__main__":
    sys.exit(main())
