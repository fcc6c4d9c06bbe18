"""Command line front end.

Words are described by a small spec language; every command takes one
(or two) word specs plus options and writes CSV or JSON.  Exit codes:
0 for success or an affirmative answer, 1 for a well-formed negative
answer (no power found, morphism is not an anchor), 2 for bad input.

Word specs:
    periodic:<c1,c2,...>
    morphic:<s>=<c,...>;...;seed=<s>
    mechanical:cf=<a1,...>[;repeat=<r>]
    enum:k=<k>
    thm11:k=<k>
    sec24
    ladder:n=<n>
    splice:[<spec>|<spec>|...];sched=<l11,l21,...;l12,...>
    contract:base=(<spec>);ivals=<lo-hi,...>
    contract:base=(<spec>);ivals=arith:<start>,<period>,<width>
    file:<path>

Morphisms are written <s>=<c,...>;<s>=<c,...> and lattice maps the same
with a mu: prefix.  Symbols may be negative.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .core import GuardError, WordStream, from_finite
from .complexity import (
    LatticeMap,
    factor_set_intersection,
    profile,
)
from .generators import (
    SeparatedIntervalSet,
    SpliceSchedule,
    constant_complexity_word,
    constant_tail_word,
    contract,
    enumeration_word,
    mechanical,
    morphic_fixed_point,
    periodic,
    splice,
    unbounded_gap_word,
)
from .morphisms import Morphism, is_anchor
from .powers import (
    find_additive_kpower,
    find_anchored_power,
    find_kpower_mod_mu,
    verify_power,
)
from .slopes import chi_factorization, chi_sequence, slope_estimate

DEFAULT_PREFIX = 100_000
DEFAULT_NMAX = 100
LARGE_PREFIX = 1_000_000


class WordSpecError(ValueError):
    """Malformed word, morphism, or lattice-map spec."""


# -- spec parsing ---------------------------------------------------------


def _split_top(s: str, sep: str) -> list[str]:
    """Split on sep outside any [] or () nesting."""
    parts, cur, depth = [], [], 0
    for ch in s:
        if ch in "[(":
            depth += 1
        elif ch in "])":
            depth -= 1
            if depth < 0:
                raise WordSpecError(f"unbalanced brackets in {s!r}")
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise WordSpecError(f"unbalanced brackets in {s!r}")
    parts.append("".join(cur))
    return parts


def _int_list(s: str, what: str = "integer list") -> list[int]:
    try:
        return [int(tok) for tok in s.split(",")] if s else []
    except ValueError:
        raise WordSpecError(f"bad {what}: {s!r}") from None


def _fmt_ints(xs) -> str:
    return ",".join(str(int(x)) for x in xs)


def _rules_from(body: str, what: str) -> dict[int, list[int]]:
    rules: dict[int, list[int]] = {}
    for field in _split_top(body, ";"):
        k, eq, v = field.partition("=")
        if not eq:
            raise WordSpecError(f"bad {what} rule {field!r}")
        try:
            letter = int(k)
        except ValueError:
            raise WordSpecError(f"bad {what} letter {k!r}") from None
        rules[letter] = _int_list(v, what)
    if not rules:
        raise WordSpecError(f"empty {what}")
    return rules


def parse_morphism_spec(spec: str) -> Morphism:
    """<s>=<c,...>;<s>=<c,...> with integer letters."""
    try:
        return Morphism(_rules_from(spec.strip(), "morphism"))
    except ValueError as e:
        raise WordSpecError(str(e)) from None


def format_morphism(phi: Morphism) -> str:
    return repr(phi)


def parse_mu_spec(spec: str) -> LatticeMap:
    """mu:<s>=<v1,v2,...>;... lattice map images."""
    spec = spec.strip()
    if not spec.startswith("mu:"):
        raise WordSpecError(f"lattice map spec must start with 'mu:': {spec!r}")
    try:
        return LatticeMap(_rules_from(spec[3:], "lattice map"))
    except ValueError as e:
        raise WordSpecError(str(e)) from None


def parse_slope(s: str) -> Fraction:
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError):
        raise WordSpecError(f"bad slope {s!r}; expected p/q or an integer") from None


def _kv_fields(body: str, what: str) -> dict[str, str]:
    fields = {}
    for field in _split_top(body, ";"):
        k, eq, v = field.partition("=")
        if not eq:
            raise WordSpecError(f"bad {what} field {field!r}")
        fields[k.strip()] = v
    return fields


def parse_word_spec(spec: str) -> tuple[WordStream, str]:
    """Build the stream and return it with a canonical rendering of the spec."""
    spec = spec.strip()
    if spec == "sec24":
        return unbounded_gap_word(), "sec24"
    head, colon, body = spec.partition(":")
    if not colon or not body:
        raise WordSpecError(f"bad word spec {spec!r}")
    if head == "periodic":
        pat = _int_list(body, "period")
        if not pat:
            raise WordSpecError("periodic needs at least one symbol")
        return periodic(pat), f"periodic:{_fmt_ints(pat)}"
    if head == "morphic":
        fields = _split_top(body, ";")
        seed: Optional[int] = None
        rules: dict[int, list[int]] = {}
        for field in fields:
            k, eq, v = field.partition("=")
            if not eq:
                raise WordSpecError(f"bad morphic field {field!r}")
            if k.strip() == "seed":
                seed = int(v)
            else:
                rules[int(k)] = _int_list(v, "image")
        if seed is None:
            raise WordSpecError("morphic needs a seed=<s> field")
        try:
            phi = Morphism(rules)
            stream = morphic_fixed_point(phi, seed)
        except ValueError as e:
            raise WordSpecError(str(e)) from None
        return stream, f"morphic:{phi!r};seed={seed}"
    if head == "mechanical":
        fields = _kv_fields(body, "mechanical")
        if "cf" not in fields:
            raise WordSpecError("mechanical needs cf=<a1,...>")
        cf = _int_list(fields.pop("cf"), "continued fraction")
        repeat = None
        if "repeat" in fields:
            repeat = int(fields.pop("repeat"))
        if fields:
            raise WordSpecError(f"unknown mechanical fields {sorted(fields)}")
        try:
            stream = mechanical(cf, repeat)
        except ValueError as e:
            raise WordSpecError(str(e)) from None
        canon = f"mechanical:cf={_fmt_ints(cf)}"
        if repeat is not None:
            canon += f";repeat={repeat}"
        return stream, canon
    if head in ("enum", "thm11", "ladder"):
        fields = _kv_fields(body, head)
        key = "n" if head == "ladder" else "k"
        if set(fields) != {key}:
            raise WordSpecError(f"{head} takes exactly {key}=<int>")
        val = int(fields[key])
        try:
            if head == "enum":
                return enumeration_word(val), f"enum:k={val}"
            if head == "thm11":
                return constant_complexity_word(val), f"thm11:k={val}"
            return constant_tail_word(val), f"ladder:n={val}"
        except ValueError as e:
            raise WordSpecError(str(e)) from None
    if head == "splice":
        if not body.startswith("["):
            raise WordSpecError("splice needs [<spec>|<spec>|...]")
        depth = 0
        end = -1
        for i, ch in enumerate(body):
            if ch in "[(":
                depth += 1
            elif ch in "])":
                depth -= 1
                if depth == 0:
                    end = i
                    break
        if end < 0 or body[end] != "]":
            raise WordSpecError(f"unbalanced source list in {spec!r}")
        inner, rest = body[1:end], body[end + 1 :]
        if not rest.startswith(";sched="):
            raise WordSpecError("splice needs ;sched=<l11,l21,...;l12,...>")
        parsed = [parse_word_spec(sub) for sub in _split_top(inner, "|")]
        rounds = [
            _int_list(row, "schedule row") for row in rest[len(";sched=") :].split(";")
        ]
        try:
            sched = SpliceSchedule(tuple(tuple(r) for r in rounds))
            stream = splice([s for s, _ in parsed], sched)
        except ValueError as e:
            raise WordSpecError(str(e)) from None
        canon_rows = ";".join(_fmt_ints(r) for r in rounds)
        canon = f"splice:[{'|'.join(c for _, c in parsed)}];sched={canon_rows}"
        return stream, canon
    if head == "contract":
        fields = _kv_fields(body, "contract")
        if set(fields) != {"base", "ivals"}:
            raise WordSpecError("contract needs base=(<spec>) and ivals=...")
        base = fields["base"]
        if not (base.startswith("(") and base.endswith(")")):
            raise WordSpecError("contract base must be wrapped in parentheses")
        sub, sub_canon = parse_word_spec(base[1:-1])
        iv = fields["ivals"]
        try:
            if iv.startswith("arith:"):
                nums = _int_list(iv[len("arith:") :], "arithmetic interval rule")
                if len(nums) != 3:
                    raise WordSpecError("arith takes <start>,<period>,<width>")
                ivals = SeparatedIntervalSet.arithmetic(*nums)
                canon_iv = f"arith:{_fmt_ints(nums)}"
            else:
                pairs = []
                for tok in iv.split(","):
                    lo, dash, hi = tok.partition("-")
                    if not dash:
                        raise WordSpecError(f"bad interval {tok!r}; expected lo-hi")
                    pairs.append((int(lo), int(hi)))
                ivals = SeparatedIntervalSet(pairs)
                canon_iv = ",".join(f"{a}-{b}" for a, b in pairs)
        except ValueError as e:
            raise WordSpecError(str(e)) from None
        return contract(sub, ivals), f"contract:base=({sub_canon});ivals={canon_iv}"
    if head == "file":
        path = Path(body)
        try:
            tokens = path.read_text().split()
            symbols = [int(t) for t in tokens]
        except OSError as e:
            raise WordSpecError(f"cannot read {body!r}: {e}") from None
        except ValueError:
            raise WordSpecError(f"{body!r} must contain whitespace-separated integers") from None
        if not symbols:
            raise WordSpecError(f"{body!r} holds no symbols")
        return from_finite(symbols, label=f"file:{body}"), f"file:{body}"
    raise WordSpecError(f"unknown word family {head!r}")


# -- output helpers -------------------------------------------------------


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_table(header: list[str], rows: list[list], args) -> None:
    if args.format == "json":
        payload = [dict(zip(header, row)) for row in rows]
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
        return
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    _emit(buf.getvalue(), args.out)


def _check_prefix(args) -> None:
    if args.prefix_length < 1:
        raise WordSpecError("prefix length must be >= 1")
    if args.prefix_length > LARGE_PREFIX and not args.unsafe_large:
        raise WordSpecError(
            f"L = {args.prefix_length} is past {LARGE_PREFIX}; pass --unsafe-large to proceed"
        )


def _power_limit(args) -> int:
    return 100 * LARGE_PREFIX if args.unsafe_large else LARGE_PREFIX


def _explain(args, canonicals: list[str]) -> bool:
    if getattr(args, "explain", False):
        for c in canonicals:
            print(c)
        return True
    return False


# -- commands -------------------------------------------------------------


def _cmd_profile(args) -> int:
    _check_prefix(args)
    w, canon = parse_word_spec(args.word)
    if _explain(args, [canon]):
        return 0
    mu = parse_mu_spec(args.mu) if args.mu else None
    prof = profile(w, args.n_max, args.prefix_length, kind=args.kind, mu=mu)
    _emit_table(
        ["n", "count", "spread"],
        [[r.n, r.count, r.spread] for r in prof.rows],
        args,
    )
    return 0


def _cmd_spread(args) -> int:
    _check_prefix(args)
    w, canon = parse_word_spec(args.word)
    if _explain(args, [canon]):
        return 0
    mu = parse_mu_spec(args.mu) if args.mu else None
    prof = profile(w, args.n_max, args.prefix_length, kind=args.kind, mu=mu)
    _emit_table(["n", "spread"], [[r.n, r.spread] for r in prof.rows], args)
    return 0


def _cmd_slope(args) -> int:
    _check_prefix(args)
    w, canon = parse_word_spec(args.word)
    if _explain(args, [canon]):
        return 0
    est = slope_estimate(w, args.prefix_length)
    _emit_table(
        ["n", "slope_p", "slope_q"],
        [[n, s.numerator, s.denominator] for n, s in est],
        args,
    )
    return 0


def _cmd_chi(args) -> int:
    _check_prefix(args)
    w, canon = parse_word_spec(args.word)
    if _explain(args, [canon]):
        return 0
    alpha = parse_slope(args.slope)
    m_max = args.m_max or args.prefix_length // alpha.denominator
    if m_max < 1:
        raise WordSpecError(f"prefix too short for one q={alpha.denominator} block")
    if m_max * alpha.denominator > args.prefix_length and not args.unsafe_large:
        raise WordSpecError("m-max needs a prefix past L; raise -L or pass --unsafe-large")
    colors = chi_sequence(w, alpha, m_max)
    _emit_table(["m", "chi"], [[m + 1, int(c)] for m, c in enumerate(colors)], args)
    return 0


def _cmd_factorize(args) -> int:
    _check_prefix(args)
    w, canon = parse_word_spec(args.word)
    if _explain(args, [canon]):
        return 0
    alpha = parse_slope(args.slope)
    fact = chi_factorization(w, alpha, args.prefix_length)
    if args.format == "json":
        payload = {
            "alpha": _frac_str(fact.alpha),
            "color": fact.color,
            "cuts": list(fact.cuts),
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        _emit_table(["cut"], [[c] for c in fact.cuts], args)
    return 0


def _cmd_anchor(args) -> int:
    phi = parse_morphism_spec(args.morphism)
    if _explain(args, [format_morphism(phi)]):
        return 0
    report = is_anchor(phi)
    payload = {
        "is_anchor": report.is_anchor,
        "weight": _frac_str(report.weight) if report.weight is not None else None,
        "image_slopes": {str(s): _frac_str(v) for s, v in report.image_slopes.items()},
        "source": list(phi.source.symbols),
        "target": list(phi.target.symbols),
        "matrix": report.matrix.tolist(),
    }
    if report.witness is not None:
        b1, b2 = report.witness
        payload["witness"] = {"b1": list(b1.symbols), "b2": list(b2.symbols)}
    else:
        payload["witness"] = None
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 0 if report.is_anchor else 1


def _cmd_powers(args) -> int:
    _check_prefix(args)
    w, canon = parse_word_spec(args.word)
    if _explain(args, [canon]):
        return 0
    L = args.prefix_length
    if args.slope is not None and args.mu is not None:
        raise WordSpecError("--slope and --mu are mutually exclusive")
    mu = parse_mu_spec(args.mu) if args.mu else None
    if args.slope is not None:
        alpha = parse_slope(args.slope)
        witness = find_anchored_power(w, alpha, args.divisor, args.k, L)
    elif mu is not None:
        witness = find_kpower_mod_mu(w, mu, args.k, L, limit=_power_limit(args))
    else:
        witness = find_additive_kpower(w, args.k, L, limit=_power_limit(args))
    if witness is None:
        _emit(json.dumps({"found": False}, indent=2) + "\n", args.out)
        return 1
    payload = {
        "found": True,
        "start": witness.start,
        "block_length": witness.block_length,
        "count": witness.count,
        "value": list(witness.value) if isinstance(witness.value, tuple) else witness.value,
        "verified": verify_power(w, witness, mu),
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def _cmd_intersect(args) -> int:
    _check_prefix(args)
    w1, c1 = parse_word_spec(args.word1)
    w2, c2 = parse_word_spec(args.word2)
    if _explain(args, [c1, c2]):
        return 0
    shared = factor_set_intersection(w1, w2, args.n, args.prefix_length)
    _emit_table(["n", "shared"], [[args.n, shared]], args)
    return 0


# -- parser ---------------------------------------------------------------


def _add_common(sub, word_args=("word",)) -> None:
    for name in word_args:
        sub.add_argument(name, help="word spec (see module docs)")
    sub.add_argument(
        "-L",
        "--prefix-length",
        type=int,
        default=DEFAULT_PREFIX,
        help=f"analyzed prefix length (default {DEFAULT_PREFIX})",
    )
    sub.add_argument("--out", help="write output to this file instead of stdout")
    sub.add_argument(
        "--format", choices=("csv", "json"), default="csv", help="output format"
    )
    sub.add_argument(
        "--unsafe-large",
        action="store_true",
        help="lift the default prefix-size cap",
    )
    sub.add_argument(
        "--explain",
        action="store_true",
        help="print the canonical spec and exit",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wordsums",
        description="Sum-based complexity, slopes, colorings and power search for infinite words.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("profile", help="counts and spreads for n = 1..n-max")
    _add_common(p)
    p.add_argument("--kind", choices=("additive", "abelian", "lattice"), default="additive")
    p.add_argument("--mu", help="lattice map spec mu:<s>=<v1,...>;... (kind=lattice)")
    p.add_argument("--n-max", type=int, default=DEFAULT_NMAX)
    p.set_defaults(func=_cmd_profile)

    p = subs.add_parser("spread", help="window-sum spreads for n = 1..n-max")
    _add_common(p)
    p.add_argument("--kind", choices=("additive", "abelian", "lattice"), default="additive")
    p.add_argument("--mu", help="lattice map spec (kind=lattice)")
    p.add_argument("--n-max", type=int, default=DEFAULT_NMAX)
    p.set_defaults(func=_cmd_spread)

    p = subs.add_parser("slope", help="prefix slope estimates at doubling lengths")
    _add_common(p)
    p.set_defaults(func=_cmd_slope)

    p = subs.add_parser("chi", help="chi coloring values for a rational slope")
    _add_common(p)
    p.add_argument("--slope", required=True, help="exact rational p/q")
    p.add_argument("--m-max", type=int, help="how many chi values (default L//q)")
    p.set_defaults(func=_cmd_chi)

    p = subs.add_parser("factorize", help="equal-slope factorization cut positions")
    _add_common(p)
    p.add_argument("--slope", required=True, help="exact rational p/q")
    p.set_defaults(func=_cmd_factorize)

    p = subs.add_parser("anchor", help="equal-image-slope report for a morphism")
    p.add_argument("morphism", help="morphism spec <s>=<c,...>;<s>=<c,...>")
    p.add_argument("--out", help="write output to this file instead of stdout")
    p.add_argument("--explain", action="store_true", help="print the canonical spec and exit")
    p.set_defaults(func=_cmd_anchor)

    p = subs.add_parser("powers", help="search for additive k-powers")
    _add_common(p)
    p.add_argument("--k", type=int, required=True, help="number of blocks")
    p.add_argument("--mu", help="search modulo this lattice map instead of sums")
    p.add_argument("--slope", help="slope-constrained search: exact rational p/q")
    p.add_argument(
        "--divisor",
        type=int,
        default=1,
        help="with --slope: block length must be divisible by divisor*q",
    )
    p.set_defaults(func=_cmd_powers)

    p = subs.add_parser("intersect", help="count shared length-n factors of two words")
    _add_common(p, word_args=("word1", "word2"))
    p.add_argument("--n", type=int, required=True, help="factor length")
    p.set_defaults(func=_cmd_intersect)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (WordSpecError, ValueError, GuardError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
