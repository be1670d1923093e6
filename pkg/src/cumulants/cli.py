"""Command line interface: exact JSON in, exact JSON out.

Exit codes: 0 success, 1 verification failure, 2 usage or input errors.
Only the JSON result goes to stdout; diagnostics go to stderr.  All
randomized verification suites run from a fixed default seed, so output
is byte-identical across runs.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
from fractions import Fraction

from .lattice import (
    Lattice,
    MultiplicativeFunction,
    convolve_lattice,
    verify_theorem,
)
from .parking import (
    PARKING_LIMIT,
    enumerate_parking,
    moments_via_volume,
    orbit_moment_eval,
    volume_bruteforce,
    volume_bruteforce_symmetric,
    volume_shape_eval,
)
from .series import TruncatedSeries, as_fraction
from .transforms import (
    MomentSequence,
    MultiplierSequence,
    _NAMED,
    abel_copy_oracle,
    abel_oracle,
    boolean_convolve,
    boolean_free_transport,
    boolean_from_moments,
    classical_convolve,
    classical_from_moments,
    cumulant_matrix,
    free_convolve,
    free_from_moments,
    gamma_convolve,
    generalized_cumulants,
    moments_from_boolean,
    moments_from_classical,
    moments_from_free,
    moments_from_generalized,
    named_sequence,
)


class UsageError(Exception):
    pass


def _read_input(spec: str) -> str:
    if spec == "-":
        return sys.stdin.read()
    try:
        with open(spec, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read input {spec!r}: {exc}") from exc


def _parse_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON input: {exc}") from exc


def _load_moments(spec: str, order: int | None) -> MomentSequence:
    """Accept a named constant, a file path, or '-' for stdin."""
    if spec in _NAMED:
        if order is None:
            raise UsageError(f"named sequence {spec!r} needs --order")
        return named_sequence(spec, order)
    data = _parse_json(_read_input(spec))
    try:
        seq = MomentSequence.from_json(data)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from exc
    if order is not None:
        if order > seq.order:
            raise UsageError(
                f"requested order {order} exceeds input order {seq.order}"
            )
        seq = seq.truncated(order)
    return seq


def _load_moment_pair(spec: str, order: int | None) -> tuple[MomentSequence, MomentSequence]:
    data = _parse_json(_read_input(spec))
    if not isinstance(data, list) or len(data) != 2:
        raise UsageError("convolve expects a JSON array of exactly two sequences")
    out = []
    for item in data:
        try:
            seq = MomentSequence.from_json(item)
        except (ValueError, TypeError) as exc:
            raise UsageError(str(exc)) from exc
        if order is not None:
            if order > seq.order:
                raise UsageError(
                    f"requested order {order} exceeds input order {seq.order}"
                )
            seq = seq.truncated(order)
        out.append(seq)
    if out[0].order != out[1].order:
        raise UsageError("the two sequences must share one order")
    return out[0], out[1]


def _parse_g(spec: str, order: int) -> MultiplierSequence:
    """Multiplier spec: a constant, the literal 'n', or a comma list."""
    if spec == "n":
        return MultiplierSequence.index(order)
    try:
        if "," in spec:
            values = [Fraction(part.strip()) for part in spec.split(",")]
            if len(values) != order:
                raise UsageError(
                    f"--g lists {len(values)} values but the order is {order}"
                )
            return MultiplierSequence.from_values(values)
        return MultiplierSequence.constant(Fraction(spec), order)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse --g {spec!r}: {exc}") from exc


def _emit(obj, path: str) -> None:
    text = json.dumps(obj) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# commands


def _cmd_transform(args) -> int:
    seq = _load_moments(args.input, args.order)
    if args.theory == "abel":
        if args.g is None:
            raise UsageError("theory 'abel' requires --g")
        g = _parse_g(args.g, seq.order)
        fn = generalized_cumulants if args.direction == "m2c" else moments_from_generalized
        result = fn(seq, g)
    else:
        if args.g is not None:
            raise UsageError(f"theory {args.theory!r} does not take --g")
        table = {
            ("classical", "m2c"): classical_from_moments,
            ("classical", "c2m"): moments_from_classical,
            ("boolean", "m2c"): boolean_from_moments,
            ("boolean", "c2m"): moments_from_boolean,
            ("free", "m2c"): free_from_moments,
            ("free", "c2m"): moments_from_free,
        }
        result = table[(args.theory, args.direction)](seq)
    _emit(result.to_json(), args.output)
    return 0


def _cmd_convolve(args) -> int:
    a, b = _load_moment_pair(args.input, args.order)
    if args.theory == "abel":
        if args.g is None:
            raise UsageError("theory 'abel' requires --g")
        result = gamma_convolve(a, b, _parse_g(args.g, a.order))
    else:
        if args.g is not None:
            raise UsageError(f"theory {args.theory!r} does not take --g")
        table = {
            "classical": classical_convolve,
            "boolean": boolean_convolve,
            "free": free_convolve,
        }
        result = table[args.theory](a, b)
    _emit(result.to_json(), args.output)
    return 0


def _cmd_matrix(args) -> int:
    if not 1 <= args.nmax <= 12 or not 1 <= args.kmax <= 12:
        raise UsageError("--nmax and --kmax must lie in 1..12")
    seq = _load_moments(args.input, args.order or args.nmax)
    if seq.order < args.nmax:
        raise UsageError(f"input order {seq.order} is below --nmax {args.nmax}")
    matrix = cumulant_matrix(seq, args.nmax, args.kmax)
    _emit(matrix.to_json(), args.output)
    return 0


def _load_series(spec: str) -> TruncatedSeries:
    data = _parse_json(_read_input(spec))
    try:
        return TruncatedSeries.from_json(data)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from exc


def _load_series_pair(spec: str) -> tuple[TruncatedSeries, TruncatedSeries]:
    data = _parse_json(_read_input(spec))
    if not isinstance(data, list) or len(data) != 2:
        raise UsageError("this operation expects a JSON array of exactly two series")
    try:
        return TruncatedSeries.from_json(data[0]), TruncatedSeries.from_json(data[1])
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from exc


def _cmd_series(args) -> int:
    binary = {"add", "mul", "compose"}
    try:
        if args.op in binary:
            f, g = _load_series_pair(args.input)
            if args.op == "add":
                result = f + g
            elif args.op == "mul":
                result = f * g
            else:
                result = f.compose(g)
        else:
            f = _load_series(args.input)
            result = {
                "reciprocal": f.reciprocal,
                "revert": f.revert,
                "log": f.log,
                "exp": f.exp,
            }[args.op]()
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(result.to_json(), args.output)
    return 0


def _cmd_volume(args) -> int:
    n = args.n
    if n is None or n < 1:
        raise UsageError("volume requires a positive --n")
    seq = (
        named_sequence("u", n)
        if args.input is None
        else _load_moments(args.input, args.order)
    )
    if seq.order < n:
        raise UsageError(f"input order {seq.order} is below --n {n}")
    report = {
        "n": n,
        "shape_volumes": [str(volume_shape_eval(seq, k)) for k in range(1, n + 1)],
        "orbit_moments": [str(orbit_moment_eval(seq, k)) for k in range(1, n + 1)],
    }
    _emit(report, args.output)
    return 0


# ---------------------------------------------------------------------------
# verification suites


def _random_sequence(rng: random.Random, order: int) -> MomentSequence:
    return MomentSequence.from_values(
        [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(order)]
    )


def _suite_lattice(n: int, seed: int) -> dict:
    if not 1 <= n <= 7:
        raise UsageError("lattice suite supports 1 <= n <= 7")
    checks = []
    theorem_n = min(n, 6)
    for which in ("T1", "T2", "T3", "COMMUTATIVITY"):
        rep = verify_theorem(theorem_n, which, seed=seed)
        checks.append({"name": which, "n": theorem_n, "pass": rep["pass"], "checked": rep["checked"]})
    delta_ok = True
    checked = 0
    for k in range(1, n + 1):
        mu = MultiplicativeFunction.mobius(k)
        zeta = MultiplicativeFunction.zeta(k)
        expected = Fraction(1 if k == 1 else 0)
        checked += 2
        if (
            convolve_lattice(mu, zeta, k, Lattice.ALL) != expected
            or convolve_lattice(zeta, mu, k, Lattice.ALL) != expected
        ):
            delta_ok = False
            break
    checks.append({"name": "MU_STAR_ZETA", "n": n, "pass": delta_ok, "checked": checked})
    return {"suite": "lattice", "n": n, "checks": checks}


def _suite_abel(n: int, seed: int) -> dict:
    if not 1 <= n <= 6:
        raise UsageError("abel suite supports 1 <= n <= 6")
    rng = random.Random(seed)
    checks = []
    for label, build in [
        ("g=0", lambda: MultiplierSequence.constant(0, n)),
        ("g=1", lambda: MultiplierSequence.constant(1, n)),
        ("g=2", lambda: MultiplierSequence.constant(2, n)),
        ("g=3", lambda: MultiplierSequence.constant(3, n)),
        ("g=4", lambda: MultiplierSequence.constant(4, n)),
        ("g=n", lambda: MultiplierSequence.index(n)),
    ]:
        g = build()
        ok = True
        checked = 0
        for _ in range(10):
            seq = _random_sequence(rng, n)
            partition_sum = generalized_cumulants(seq, g)
            for m in range(1, n + 1):
                k = int(g.g(m))
                checked += 2
                if partition_sum.values[m - 1] != abel_oracle(seq, g, m):
                    ok = False
                    break
                if partition_sum.values[m - 1] != abel_copy_oracle(seq, k, m):
                    ok = False
                    break
            if not ok:
                break
        checks.append({"name": label, "pass": ok, "checked": checked})
    return {"suite": "abel", "n": n, "checks": checks}


def _suite_volume(n: int, seed: int) -> dict:
    if not 1 <= n <= PARKING_LIMIT:
        raise UsageError(f"volume suite supports 1 <= n <= {PARKING_LIMIT}")
    rng = random.Random(seed)
    checks = []

    count = len(enumerate_parking(n))
    total = math.factorial(n) * volume_bruteforce([1] * n)
    ok = count == (n + 1) ** (n - 1) and total == count
    checks.append(
        {
            "name": "PARKING_COUNT",
            "pass": ok,
            "n_factorial_volume_at_ones": str(total),
        }
    )

    ok = True
    checked = 0
    for k in range(1, min(n, 6) + 1):
        seq = _random_sequence(rng, k)
        checked += 1
        if volume_bruteforce_symmetric(seq, k) != volume_shape_eval(seq, k):
            ok = False
            break
    checks.append({"name": "SHAPE_VS_BRUTEFORCE", "pass": ok, "checked": checked})

    ok = True
    checked = 0
    for k in range(1, min(n, 6) + 1):
        ubar = named_sequence("ubar", k)
        catalan = named_sequence("catalan", k)
        lhs = math.factorial(k) * volume_shape_eval(ubar, k)
        checked += 1
        if lhs != math.factorial(k) * catalan.values[k - 1]:
            ok = False
            break
    checks.append({"name": "CATALAN_VOLUME", "pass": ok, "checked": checked})

    ok = True
    checked = 0
    for _ in range(10):
        seq = _random_sequence(rng, 8)
        checked += 1
        if moments_via_volume(seq) != seq:
            ok = False
            break
    checks.append({"name": "MOMENTS_VIA_VOLUME", "pass": ok, "checked": checked})
    return {"suite": "volume", "n": n, "checks": checks}


def _suite_transport(n: int, seed: int) -> dict:
    if not 1 <= n <= 12:
        raise UsageError("transport suite supports 1 <= n <= 12")
    rng = random.Random(seed)
    checks = []
    ok = True
    checked = 0
    for _ in range(10):
        a = _random_sequence(rng, n)
        b = _random_sequence(rng, n)
        checked += 1
        lhs = boolean_free_transport(free_convolve(a, b))
        rhs = boolean_convolve(boolean_free_transport(a), boolean_free_transport(b))
        if lhs != rhs:
            ok = False
            break
    checks.append({"name": "INTERTWINING", "pass": ok, "checked": checked})

    catalan = named_sequence("catalan", n)
    expected = MomentSequence.from_values([-1] + [0] * (n - 1))
    checks.append(
        {"name": "CATALAN_TRANSPORT", "pass": boolean_free_transport(catalan) == expected}
    )
    return {"suite": "transport", "n": n, "checks": checks}


def _suite_parametrization(n: int, seed: int) -> dict:
    if not 1 <= n <= 12:
        raise UsageError("parametrization suite supports 1 <= n <= 12")
    rng = random.Random(seed)
    checks = []

    ok = True
    checked = 0
    for _ in range(10):
        a = _random_sequence(rng, n)
        c = classical_from_moments(a)
        for m in range(1, n + 1):
            lhs = a.moment(m)
            rhs = sum(
                math.comb(m - 1, j) * c.moment(j + 1) * a.moment(m - 1 - j)
                for j in range(m)
            )
            checked += 1
            if lhs != rhs:
                ok = False
                break
        if not ok:
            break
    checks.append({"name": "CLASSICAL_RECURSION", "pass": ok, "checked": checked})

    ok = True
    checked = 0
    for _ in range(10):
        a = _random_sequence(rng, n)
        barred = a.bar()
        checked += 2
        g2 = MultiplierSequence.constant(2, n)
        if generalized_cumulants(barred, g2) != boolean_from_moments(a).bar():
            ok = False
            break
        gn = MultiplierSequence.index(n)
        if generalized_cumulants(barred, gn) != free_from_moments(a).bar():
            ok = False
            break
    checks.append({"name": "BARRED_SPECIALIZATIONS", "pass": ok, "checked": checked})

    ok = True
    checked = 0
    for _ in range(10):
        a = _random_sequence(rng, n)
        j = Fraction(rng.randint(1, 5), rng.randint(1, 3))
        g = MultiplierSequence.from_values(_random_sequence(rng, n).values)
        checked += 1
        if generalized_cumulants(a.scaled(j), g) != generalized_cumulants(a, g).scaled(j):
            ok = False
            break
    checks.append({"name": "HOMOGENEITY", "pass": ok, "checked": checked})
    return {"suite": "parametrization", "n": n, "checks": checks}


_SUITES = {
    "lattice": _suite_lattice,
    "abel": _suite_abel,
    "volume": _suite_volume,
    "transport": _suite_transport,
    "parametrization": _suite_parametrization,
}


def _cmd_verify(args) -> int:
    if args.n is None:
        raise UsageError("verify requires --n")
    report = _SUITES[args.suite](args.n, args.seed)
    report["pass"] = all(check["pass"] for check in report["checks"])
    if not report["pass"]:
        report["first_failure"] = next(
            check["name"] for check in report["checks"] if not check["pass"]
        )
    _emit(report, args.output)
    return 0 if report["pass"] else 1


# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cumulants",
        description="Exact moment/cumulant transforms and their verification oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p, default_input=True):
        if default_input:
            p.add_argument("--input", default="-", help="file path, '-' for stdin, or a named sequence")
        else:
            p.add_argument("--input", default=None)
        p.add_argument("--output", default="-", help="file path or '-' for stdout")

    p = sub.add_parser("transform", help="moment/cumulant transforms")
    p.add_argument("--theory", required=True, choices=["classical", "boolean", "free", "abel"])
    p.add_argument("--direction", required=True, choices=["m2c", "c2m"])
    p.add_argument("--g", default=None, help="multiplier: a constant, 'n', or a comma list")
    p.add_argument("--order", type=int, default=None)
    add_io(p)
    p.set_defaults(fn=_cmd_transform)

    p = sub.add_parser("convolve", help="convolve two sequences in a chosen theory")
    p.add_argument("--theory", required=True, choices=["classical", "boolean", "free", "abel"])
    p.add_argument("--g", default=None)
    p.add_argument("--order", type=int, default=None)
    add_io(p)
    p.set_defaults(fn=_cmd_convolve)

    p = sub.add_parser("matrix", help="cumulant matrix over constant multipliers")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--order", type=int, default=None)
    add_io(p)
    p.set_defaults(fn=_cmd_matrix)

    p = sub.add_parser("series", help="truncated power series operations")
    p.add_argument(
        "--op",
        required=True,
        choices=["add", "mul", "reciprocal", "compose", "revert", "log", "exp"],
    )
    add_io(p)
    p.set_defaults(fn=_cmd_series)

    p = sub.add_parser("volume", help="volume and orbit tables")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--order", type=int, default=None)
    add_io(p, default_input=False)
    p.set_defaults(fn=_cmd_volume)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=sorted(_SUITES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", default="-")
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
