"""Command-line front end.

Every subcommand takes --format {json|csv|plain}; JSON output has sorted
keys and serializes every coefficient as a decimal string, so identical
invocations produce byte-identical output.  Precision (truncation level)
is always explicit except where a command's result is provably
independent of it (series evaluation, auto-leveled expansions).

Exit codes: 0 success, 1 usage error, 2 violated mathematical
precondition, 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from typing import Optional, TextIO

from . import completion, cyclotomic, qcrt, rootexp
from .completion import (
    AdicChain,
    FiltrationChain,
    NAMED_SERIES,
    PochhammerChain,
    ProductChain,
)
from .errors import PrecisionContractError
from .polyring import IntPolynomial, RatPolynomial


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit_json(out: TextIO, payload) -> None:
    out.write(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    out.write("\n")


def _emit_csv(out: TextIO, header: str, rows) -> None:
    out.write(header + "\n")
    for row in rows:
        out.write(",".join(str(x) for x in row) + "\n")


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x != ""]
    except ValueError as exc:
        raise UsageError(f"expected a comma-separated integer list, got {text!r}") from exc


def _parse_poly(text: str) -> IntPolynomial:
    try:
        data = json.loads(text)
        return IntPolynomial.from_json(data)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad polynomial JSON {text!r}: {exc}") from exc


def _parse_rat_poly(text: str) -> RatPolynomial:
    try:
        data = json.loads(text)
        return RatPolynomial.from_json(data)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad polynomial JSON {text!r}: {exc}") from exc


def _parse_chain(spec: str) -> FiltrationChain:
    """pochhammer | adic:<n> | adic:<coeff json> | product:<n1,n2,...>"""
    if spec == "pochhammer":
        return PochhammerChain()
    if spec.startswith("adic:"):
        arg = spec[len("adic:") :]
        if arg.startswith("["):
            return AdicChain(_parse_poly(arg))
        try:
            n = int(arg)
        except ValueError as exc:
            raise UsageError(f"bad adic chain spec {spec!r}") from exc
        return AdicChain(cyclotomic.cyclotomic_poly(n))
    if spec.startswith("product:"):
        return ProductChain(_parse_int_list(spec[len("product:") :]))
    raise UsageError(f"unknown chain spec {spec!r}")


def _parse_ring(name: str) -> cyclotomic.RingDescriptor:
    if name == "Z":
        return cyclotomic.RING_Z
    if name == "Q":
        return cyclotomic.RING_Q
    if name.startswith("Z1/"):
        try:
            return cyclotomic.ring_z_inverted(int(name[3:]))
        except ValueError as exc:
            raise UsageError(f"bad ring spec {name!r}") from exc
    raise UsageError(f"unknown ring {name!r} (expected Z, Q, or Z1/m)")


def _parse_lambda(text: str) -> qcrt.ExponentVector:
    pairs = {}
    try:
        for item in text.split(","):
            n, e = item.split(":")
            pairs[int(n)] = int(e)
    except ValueError as exc:
        raise UsageError(f"bad exponent vector {text!r} (expected n:e,n:e,...)") from exc
    return qcrt.ExponentVector(pairs)


class Budgets:
    """Guardrails from an optional config file; they never supply
    defaults, only reject oversized requests."""

    def __init__(self, max_level: Optional[int] = None, max_order: Optional[int] = None):
        self.max_level = max_level
        self.max_order = max_order

    @staticmethod
    def load(path: Optional[str]) -> "Budgets":
        if not path:
            return Budgets()
        try:
            with open(path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read config {path!r}: {exc}") from exc
        return Budgets(data.get("max_level"), data.get("max_order"))

    def check_level(self, level: int) -> int:
        if self.max_level is not None and level > self.max_level:
            raise UsageError(f"level {level} exceeds configured budget {self.max_level}")
        return level

    def check_order(self, order: int) -> int:
        if self.max_order is not None and order > self.max_order:
            raise UsageError(f"order {order} exceeds configured budget {self.max_order}")
        return order


# -- subcommand implementations ---------------------------------------------


def _poly_payload(out: TextIO, fmt: str, payload: dict, poly, plain_label: str) -> None:
    if fmt == "json":
        _emit_json(out, payload)
    elif fmt == "csv":
        _emit_csv(out, "index,coefficient", list(enumerate(poly.to_json())))
    else:
        out.write(f"{plain_label}{poly}\n")


def _cmd_cyclotomic(args, out: TextIO, budgets: Budgets) -> int:
    n = budgets.check_order(args.n)
    poly = cyclotomic.cyclotomic_poly(n)
    _poly_payload(out, args.format, {"coeffs": poly.to_json(), "n": n}, poly, f"Phi_{n} = ")
    return 0


def _cmd_pochhammer(args, out: TextIO, budgets: Budgets) -> int:
    n = budgets.check_level(args.n)
    poly = cyclotomic.pochhammer(n)
    _poly_payload(out, args.format, {"coeffs": poly.to_json(), "n": n}, poly, f"(q)_{n} = ")
    return 0


def _cmd_graph(args, out: TextIO, budgets: Budgets) -> int:
    desc = _parse_ring(args.ring)
    members = _parse_int_list(args.set)
    if not members:
        raise UsageError("--set needs at least one vertex")
    comps = cyclotomic.connected_components(desc, members)
    if args.format == "json":
        _emit_json(
            out,
            {"components": comps, "ring": desc.name, "set": sorted(set(members))},
        )
    elif args.format == "csv":
        rows = [(i, m) for i, comp in enumerate(comps) for m in comp]
        _emit_csv(out, "component,member", rows)
    else:
        out.write(f"{len(comps)} component(s) over {desc.name}:\n")
        for comp in comps:
            out.write("  " + " ".join(map(str, comp)) + "\n")
    return 0


def _element_payload(out: TextIO, fmt: str, elt: completion.TruncatedElement) -> None:
    if fmt == "json":
        _emit_json(out, elt.to_json_dict())
    elif fmt == "csv":
        _emit_csv(out, "index,coefficient", list(enumerate(elt.rep.to_json())))
    else:
        out.write(f"{elt.rep} (mod g_{elt.level} on {elt.chain.label})\n")


def _cmd_habiro_reduce(args, out: TextIO, budgets: Budgets) -> int:
    chain = _parse_chain(args.chain)
    level = budgets.check_level(args.level)
    elt = completion.reduce(_parse_poly(args.poly), chain, level)
    _element_payload(out, args.format, elt)
    return 0


def _cmd_habiro_digits(args, out: TextIO, budgets: Budgets) -> int:
    chain = _parse_chain(args.chain)
    level = budgets.check_level(args.level)
    elt = completion.reduce(_parse_poly(args.poly), chain, level)
    digits = completion.to_digits(elt)
    if args.format == "json":
        _emit_json(
            out,
            {
                "chain": chain.to_json_dict(),
                "digits": [d.to_json() for d in digits.digits],
                "level": level,
            },
        )
    elif args.format == "csv":
        rows = [
            (n, i, c)
            for n, d in enumerate(digits.digits)
            for i, c in enumerate(d.to_json())
        ]
        _emit_csv(out, "digit,index,coefficient", rows)
    else:
        for n, d in enumerate(digits.digits):
            out.write(f"a_{n} = {d}\n")
    return 0


def _cmd_habiro_rho(args, out: TextIO, budgets: Budgets) -> int:
    src = _parse_chain(args.from_chain)
    dst = _parse_chain(args.to_chain)
    budgets.check_level(max(args.from_level, args.to_level))
    elt = completion.reduce(_parse_poly(args.poly), src, args.from_level)
    _element_payload(out, args.format, completion.rho(elt, dst, args.to_level))
    return 0


def _cmd_habiro_series(args, out: TextIO, budgets: Budgets) -> int:
    spec = NAMED_SERIES[args.name]
    level = budgets.check_level(args.level)
    chain = PochhammerChain()
    elt = completion.series_realize(spec, chain, level)
    if args.check_unit:
        if args.name != "qinv":
            raise UsageError("--check-unit only applies to the qinv series")
        q_elt = completion.reduce(IntPolynomial.monomial(1, 1), chain, level)
        one = completion.reduce(IntPolynomial.one(), chain, level)
        ok = (q_elt * elt) == one
        out.write(f"q*inv == 1 mod (q)_{level}: {'true' if ok else 'false'}\n")
        return 0 if ok else 3
    _element_payload(out, args.format, elt)
    return 0


def _cmd_habiro_eval(args, out: TextIO, budgets: Budgets) -> int:
    spec = NAMED_SERIES[args.series]
    orders = _parse_int_list(args.orders)
    if not orders:
        raise UsageError("--orders needs at least one order")
    for n in orders:
        budgets.check_order(n)
    # Values of a terminating evaluation do not depend on the level once
    # it reaches the order, so the minimal sufficient level is a safe
    # default here.
    level = args.level if args.level is not None else max(orders)
    budgets.check_level(level)
    elt = completion.series_realize(spec, PochhammerChain(), level)
    values = rootexp.tau_values(elt, orders)
    if args.format == "json":
        _emit_json(
            out,
            {
                "level": level,
                "series": args.series,
                "values": {str(n): v.to_json_dict() for n, v in values.items()},
            },
        )
    elif args.format == "csv":
        rows = [
            (n, i, c)
            for n, v in sorted(values.items())
            for i, c in enumerate(v.to_json_dict()["coeffs"])
        ]
        _emit_csv(out, "order,index,coefficient", rows)
    else:
        for n, v in sorted(values.items()):
            out.write(f"order {n}: {v}\n")
    return 0


def _cmd_habiro_expand(args, out: TextIO, budgets: Budgets) -> int:
    spec = NAMED_SERIES[args.series]
    if args.terms < 1:
        raise UsageError("--terms must be >= 1")
    budgets.check_order(args.center)
    budgets.check_level(args.center * args.terms)
    series = rootexp.expand_series(spec, args.center, args.terms - 1)
    if args.format == "json":
        _emit_json(out, series.to_json_dict())
    elif args.format == "csv":
        rows = []
        for j, c in enumerate(series.coeffs):
            rows.append((j, ";".join(str(x) for x in c.coeffs)))
        _emit_csv(out, "j,coefficient", rows)
    else:
        for j, c in enumerate(series.coeffs):
            out.write(f"c_{j} = {c}\n")
    return 0


def _cmd_qcrt_split(args, out: TextIO, budgets: Budgets) -> int:
    lam = _parse_lambda(args.lam)
    comps = qcrt.crt_split(_parse_rat_poly(args.poly), lam)
    if args.format == "json":
        _emit_json(
            out,
            {
                "components": {str(n): c.to_json() for n, c in comps.components},
                "lambda": {str(n): e for n, e in lam.exponents},
            },
        )
    elif args.format == "csv":
        rows = [
            (n, i, c)
            for n, comp in comps.components
            for i, c in enumerate(comp.to_json())
        ]
        _emit_csv(out, "n,index,coefficient", rows)
    else:
        for n, comp in comps.components:
            out.write(f"mod Phi_{n}^{lam.exponent(n)}: {comp}\n")
    return 0


def _cmd_qcrt_witness(args, out: TextIO, budgets: Budgets) -> int:
    level = budgets.check_level(args.level)
    w = qcrt.rho_q_kernel_witness(level)
    f1 = (cyclotomic.cyclotomic_poly(1) ** level).to_rational()
    f2 = (cyclotomic.cyclotomic_poly(2) ** level).to_rational()
    zero_check = (w % f1).is_zero
    one_check = ((w - RatPolynomial.one()) % f2).is_zero
    if args.format == "json":
        _emit_json(
            out,
            {
                "checks": {
                    "one_mod_(q+1)^N": one_check,
                    "zero_mod_(q-1)^N": zero_check,
                },
                "level": level,
                "witness": w.to_json(),
            },
        )
    elif args.format == "csv":
        _emit_csv(out, "index,coefficient", list(enumerate(w.to_json())))
    else:
        out.write(f"witness = {w}\n")
        out.write(f"zero mod (q-1)^{level}: {str(zero_check).lower()}\n")
        out.write(f"one mod (q+1)^{level}: {str(one_check).lower()}\n")
    if not (zero_check and one_check):
        return 3
    return 0


# -- selfcheck ----------------------------------------------------------------


def _phi_by_trial_division(n: int) -> int:
    out, rest, p = 1, n, 2
    while p * p <= rest:
        if rest % p == 0:
            out *= p - 1
            rest //= p
            while rest % p == 0:
                out *= p
                rest //= p
        p += 1
    if rest > 1:
        out *= rest - 1
    return out


def _selfcheck_suite() -> list[tuple[str, bool]]:
    rng = random.Random(0x5EED)
    results: list[tuple[str, bool]] = []

    def check(name: str, fn) -> None:
        try:
            results.append((name, bool(fn())))
        except Exception:
            results.append((name, False))

    def product_law():
        for n in range(1, 41):
            prod = IntPolynomial.one()
            for d in range(1, n + 1):
                if n % d == 0:
                    prod = prod * cyclotomic.cyclotomic_poly(d)
            if prod != IntPolynomial.monomial(1, n) - IntPolynomial.one():
                return False
        return True

    check("cyclotomic_product_law_n<=40", product_law)

    check(
        "cyclotomic_degree_is_phi_n<=40",
        lambda: all(
            cyclotomic.cyclotomic_poly(n).degree == _phi_by_trial_division(n)
            for n in range(1, 41)
        ),
    )

    check(
        "c_value_symmetry_n<=30",
        lambda: all(
            cyclotomic.c_value(m, n) == cyclotomic.c_value(n, m)
            for m in range(1, 31)
            for n in range(1, 31)
        ),
    )

    def digit_roundtrip():
        chain = PochhammerChain()
        for _ in range(25):
            f = IntPolynomial([rng.randint(-99, 99) for _ in range(rng.randint(0, 40))])
            a = completion.reduce(f, chain, 10)
            if completion.from_digits(completion.to_digits(a), 10) != a:
                return False
        return True

    check("digit_roundtrip_seeded", digit_roundtrip)

    def qinv_identity():
        chain = PochhammerChain()
        for n in range(1, 13):
            inv = completion.series_realize(completion.Q_INVERSE_SPEC, chain, n)
            q_elt = completion.reduce(IntPolynomial.monomial(1, 1), chain, n)
            if q_elt * inv != completion.reduce(IntPolynomial.one(), chain, n):
                return False
        return True

    check("q_inverse_identity_n<=12", qinv_identity)

    def coprimality():
        for m in range(1, 21):
            for n in range(m + 1, 21):
                cert = cyclotomic.cyclotomic_coprimality(m, n)
                unit = isinstance(cert, cyclotomic.UnitCertificate)
                if unit != (cyclotomic.c_value(m, n) == 1):
                    return False
        return True

    check("coprimality_dichotomy_n<=20", coprimality)

    def tau_sigma():
        chain = PochhammerChain()
        for _ in range(10):
            f = IntPolynomial([rng.randint(-50, 50) for _ in range(rng.randint(1, 30))])
            a = completion.reduce(f, chain, 8)
            for n in range(1, 9):
                t = rootexp.taylor_at_root(a, n, 0)
                if t.coeffs[0] != rootexp.evaluate_at_root(a, n):
                    return False
        return True

    check("taylor_matches_evaluation", tau_sigma)

    def crt_roundtrip():
        from fractions import Fraction

        lam = qcrt.ExponentVector({1: 2, 2: 1, 3: 2})
        for _ in range(10):
            f = RatPolynomial(
                [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(8)]
            )
            c = qcrt.crt_split(f, lam)
            g = qcrt.crt_reconstruct(c, lam)
            if (f - g) % lam.modulus() != RatPolynomial.zero():
                return False
        return True

    check("crt_roundtrip_seeded", crt_roundtrip)

    def witnesses():
        for n in range(1, 4):
            w = qcrt.rho_q_kernel_witness(n)
            f1 = (cyclotomic.cyclotomic_poly(1) ** n).to_rational()
            f2 = (cyclotomic.cyclotomic_poly(2) ** n).to_rational()
            if w.is_zero or not (w % f1).is_zero:
                return False
            if not ((w - RatPolynomial.one()) % f2).is_zero:
                return False
        return True

    check("rational_kernel_witness_n<=3", witnesses)

    def hom_law():
        chains = [
            PochhammerChain(),
            AdicChain(cyclotomic.cyclotomic_poly(2)),
            ProductChain([1, 2, 3]),
        ]
        for chain in chains:
            for _ in range(20):
                f = IntPolynomial([rng.randint(-9, 9) for _ in range(rng.randint(0, 12))])
                g = IntPolynomial([rng.randint(-9, 9) for _ in range(rng.randint(0, 12))])
                k = rng.randint(0, 6)
                fr = completion.reduce(f, chain, k)
                gr = completion.reduce(g, chain, k)
                if fr * gr != completion.reduce(f * g, chain, k):
                    return False
                if fr + gr != completion.reduce(f + g, chain, k):
                    return False
        return True

    check("reduce_is_ring_homomorphism", hom_law)

    return results


def _cmd_selfcheck(args, out: TextIO, budgets: Budgets) -> int:
    results = _selfcheck_suite()
    failed = False
    if args.format == "json":
        _emit_json(out, {name: ok for name, ok in results})
        failed = not all(ok for _, ok in results)
    elif args.format == "csv":
        _emit_csv(out, "check,result", [(n, "ok" if ok else "FAIL") for n, ok in results])
        failed = not all(ok for _, ok in results)
    else:
        for name, ok in results:
            out.write(f"{'ok  ' if ok else 'FAIL'} {name}\n")
            failed = failed or not ok
    return 3 if failed else 0


# -- parser / dispatcher -------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(prog="cyclocomp", description=__doc__)
    parser.add_argument("--config", help="JSON config file with budget guardrails")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format", choices=["json", "csv", "plain"], default="json"
        )

    p = sub.add_parser("cyclotomic", help="n-th cyclotomic polynomial")
    p.add_argument("n", type=int)
    add_format(p)
    p.set_defaults(fn=_cmd_cyclotomic)

    p = sub.add_parser("pochhammer", help="q-Pochhammer product (q)_n")
    p.add_argument("n", type=int)
    add_format(p)
    p.set_defaults(fn=_cmd_pochhammer)

    p = sub.add_parser("graph", help="adjacency components of an index set")
    p.add_argument("--ring", required=True, help="Z, Q, or Z1/m")
    p.add_argument("--set", required=True, help="comma-separated vertices")
    add_format(p)
    p.set_defaults(fn=_cmd_graph)

    habiro = sub.add_parser("habiro", help="truncated completion arithmetic")
    hsub = habiro.add_subparsers(dest="subcommand", required=True)

    p = hsub.add_parser("reduce", help="canonical remainder at a level")
    p.add_argument("--chain", required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--poly", required=True)
    add_format(p)
    p.set_defaults(fn=_cmd_habiro_reduce)

    p = hsub.add_parser("digits", help="unique digit expansion")
    p.add_argument("--chain", required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--poly", required=True)
    add_format(p)
    p.set_defaults(fn=_cmd_habiro_digits)

    p = hsub.add_parser("rho", help="restriction to a coarser chain")
    p.add_argument("--from-chain", required=True)
    p.add_argument("--from-level", type=int, required=True)
    p.add_argument("--to-chain", required=True)
    p.add_argument("--to-level", type=int, required=True)
    p.add_argument("--poly", required=True)
    add_format(p)
    p.set_defaults(fn=_cmd_habiro_rho)

    p = hsub.add_parser("series", help="realize a named series at a level")
    p.add_argument("--name", choices=sorted(NAMED_SERIES), required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--check-unit", action="store_true")
    add_format(p)
    p.set_defaults(fn=_cmd_habiro_series)

    p = hsub.add_parser("eval", help="values at roots of unity")
    p.add_argument("--series", choices=sorted(NAMED_SERIES), required=True)
    p.add_argument("--orders", required=True)
    p.add_argument("--level", type=int, default=None)
    add_format(p)
    p.set_defaults(fn=_cmd_habiro_eval)

    p = hsub.add_parser("expand", help="Taylor expansion at a root of unity")
    p.add_argument("--series", choices=sorted(NAMED_SERIES), required=True)
    p.add_argument("--center", type=int, required=True, help="order of the root")
    p.add_argument("--terms", type=int, required=True, help="number of coefficients")
    add_format(p)
    p.set_defaults(fn=_cmd_habiro_expand)

    qc = sub.add_parser("qcrt", help="rational CRT splitting")
    qsub = qc.add_subparsers(dest="subcommand", required=True)

    p = qsub.add_parser("split", help="componentwise remainders")
    p.add_argument("--lambda", dest="lam", required=True, help="n:e,n:e,...")
    p.add_argument("--poly", required=True)
    add_format(p)
    p.set_defaults(fn=_cmd_qcrt_split)

    p = qsub.add_parser("witness", help="kernel witness for restriction over Q")
    p.add_argument("--level", type=int, required=True)
    add_format(p)
    p.set_defaults(fn=_cmd_qcrt_witness)

    p = sub.add_parser("selfcheck", help="run the invariant suite")
    add_format(p)
    p.set_defaults(fn=_cmd_selfcheck)

    return parser


def run(argv: list[str], out: TextIO, err: TextIO = sys.stderr) -> int:
    cache_dir = os.environ.get("HABIRO_CACHE_DIR")
    cache_file = os.path.join(cache_dir, "cyclotomic_cache.json") if cache_dir else None
    try:
        if cache_file:
            try:
                cyclotomic.load_cyclotomic_cache(cache_file)
            except (OSError, ValueError):
                pass  # corrupt or unreadable cache must never break a run
        parser = build_parser()
        args = parser.parse_args(argv)
        budgets = Budgets.load(args.config)
        code = args.fn(args, out, budgets)
    except UsageError as exc:
        err.write(f"error: usage: {exc}\n")
        return 1
    except PrecisionContractError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return 2
    except Exception as exc:  # internal invariant failure
        err.write(f"error: internal: {type(exc).__name__}: {exc}\n")
        return 3
    finally:
        if cache_file:
            try:
                os.makedirs(cache_dir, exist_ok=True)
                cyclotomic.save_cyclotomic_cache(cache_file)
            except OSError:
                pass
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:], sys.stdout))


if __name__ == "__main__":
    main()
