"""Command-line surface.

Subcommands: info, hdet, fixed, ample, quiver {qs,qsg,covering,canonical},
reflect {at,search}, check.  A config file of key=value lines can seed any
flag; explicit flags win.  Identical configs produce byte-identical output.

Cyclotomic scalars are accepted as "p", "p/q", "zeta(n)", "zeta(n)^k" or
"p/q*zeta(n)^k" with an optional leading minus; exactness without a general
expression parser.
"""

import argparse
import json
import re
import sys
from math import gcd, lcm

from .rationals import RAT
from .cyclotomic import cyc, zeta
from .algebra import (
    SpecError,
    hilbert_dims,
    jordan_spec,
    quantum_spec,
)
from .automorphisms import (
    NotApplicableError,
    NotTabulatedError,
    diagonal_automorphism,
    hdet_koszul,
    hdet_normal_recursion,
    hdet_table,
    is_graded_automorphism,
    linear_automorphism,
    make_cyclic_group,
    make_diagonal_action,
    triangular_automorphism,
)
from .skew import (
    SkewElement,
    ampleness_report,
    corner_dimension_checks,
    fixed_ring_dims,
    idempotent_e,
    min_phi_degree,
    molien_check,
    molien_dims,
    phi_injectivity_check,
    rho_idempotents,
    skew_mul,
)
from .quivers import (
    bgp_reflect,
    canonical_type,
    components,
    covering_quiver,
    make_canonical_quiver,
    path_count,
    quiver_isomorphic,
    quiver_qs,
    quiver_qsg,
    reflection_search,
    to_dot,
    to_json_dict,
)
from .beilinson import (
    gabriel_quiver_oracle,
    idempotent_system_report,
    lambda_dim,
    nabla_dim,
    nabla_skew_dim_formula,
    nabla_skew_structure_check,
)

_ZETA_RE = re.compile(
    r"""^\s*(?P<sign>-)?\s*
        (?:(?P<num>\d+)(?:/(?P<den>\d+))?)?
        \s*(?:(?P<star>\*)?\s*zeta\((?P<n>\d+)\)(?:\^(?P<k>-?\d+))?)?\s*$""",
    re.VERBOSE,
)


def parse_cyclotomic(text):
    """Parse 'p', 'p/q', 'zeta(n)^k' or 'p/q*zeta(n)^k', optionally negated."""
    m = _ZETA_RE.match(text)
    if not m or (m.group("num") is None and m.group("n") is None):
        raise ValueError("cannot parse cyclotomic value %r" % text)
    if m.group("num") is not None and m.group("n") is not None and not m.group("star"):
        raise ValueError("missing '*' between coefficient and zeta in %r" % text)
    value = cyc(1)
    if m.group("num") is not None:
        den = int(m.group("den")) if m.group("den") else 1
        if den == 0:
            raise ValueError("zero denominator in %r" % text)
        value = cyc(RAT(int(m.group("num")), den))
    if m.group("n") is not None:
        k = int(m.group("k")) if m.group("k") else 1
        value = value * zeta(int(m.group("n")), k)
    if m.group("sign"):
        value = -value
    return value


def _add_spec_flags(p):
    p.add_argument("--wx", type=int, default=None, help="weight of x")
    p.add_argument("--wy", type=int, default=None, help="weight of y")
    p.add_argument("--family", choices=["quantum", "jordan"], default=None)
    p.add_argument("--alpha", default=None,
                   help="quantum parameter, e.g. 1, -1, 2/3, zeta(5)^2")
    p.add_argument("--config", default=None, help="key=value file seeding any flag")


def _add_out_flags(p, formats=("text", "json")):
    p.add_argument("--format", choices=list(formats), default=None)
    p.add_argument("--out", default=None, help="write output to this file")


def build_parser():
    ap = argparse.ArgumentParser(prog="asreg2", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="weights, family, Gorenstein parameter, Hilbert dims")
    _add_spec_flags(p)
    p.add_argument("--max-degree", type=int, default=None)
    _add_out_flags(p)

    p = sub.add_parser("hdet", help="homological determinant of an automorphism")
    _add_spec_flags(p)
    p.add_argument("--a", default=None, help="x -> a x (+ b y)")
    p.add_argument("--b", default=None, help="y-coefficient of sigma(x), weights (1,1) only")
    p.add_argument("--c", default=None, help="x^q-coefficient of sigma(y)")
    p.add_argument("--d", default=None, help="y-coefficient of sigma(y); jordan fixes d = a^q")
    _add_out_flags(p)

    p = sub.add_parser("fixed", help="fixed-ring dimensions and trace-average check")
    _add_spec_flags(p)
    p.add_argument("--r", type=int, default=None, help="group order")
    p.add_argument("--max-degree", type=int, default=None)
    _add_out_flags(p)

    p = sub.add_parser("ample", help="graded dimensions of S*G/(e) and the verdict")
    _add_spec_flags(p)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--max-degree", type=int, default=None,
                   help="window top; default 4*ell*r")
    p.add_argument("--action-powers", default=None,
                   help="px,py for exploratory diagonal actions (default 1,-1)")
    _add_out_flags(p)

    p = sub.add_parser("quiver", help="emit a quiver as text, JSON or DOT")
    p.add_argument("kind", choices=["qs", "qsg", "covering", "canonical"])
    _add_spec_flags(p)
    p.add_argument("--r", type=int, default=None, help="group order (qsg)")
    p.add_argument("--c", type=int, default=None, help="covering degree")
    p.add_argument("--i", type=int, default=None, help="canonical path length i")
    p.add_argument("--j", type=int, default=None, help="canonical path length j")
    _add_out_flags(p, formats=("text", "json", "dot"))

    p = sub.add_parser("reflect", help="BGP reflections")
    refl = p.add_subparsers(dest="mode", required=True)
    pa = refl.add_parser("at", help="reflect a constructed quiver at one vertex")
    pa.add_argument("--kind", choices=["qs", "qsg", "covering"], default="qs")
    _add_spec_flags(pa)
    pa.add_argument("--r", type=int, default=None)
    pa.add_argument("--c", type=int, default=None)
    pa.add_argument("--vertex", required=True)
    _add_out_flags(pa, formats=("text", "json", "dot"))
    ps = refl.add_parser("search", help="search a reflection path to a canonical quiver")
    _add_spec_flags(ps)
    ps.add_argument("--c", type=int, default=None, help="covering degree of the source")
    ps.add_argument("--target-i", type=int, required=True)
    ps.add_argument("--target-j", type=int, required=True)
    ps.add_argument("--max-depth", type=int, default=None)
    _add_out_flags(ps)

    p = sub.add_parser("check", help="run the full invariant suite for one spec/action")
    _add_spec_flags(p)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--max-degree", type=int, default=None)
    _add_out_flags(p)

    return ap


def _apply_config(args):
    if getattr(args, "config", None) is None:
        return
    assigned = {}
    with open(args.config) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise SystemExit("config %s line %d: expected key=value" % (args.config, lineno))
            key, value = line.split("=", 1)
            assigned[key.strip().replace("-", "_")] = value.strip()
    for key, value in assigned.items():
        if not hasattr(args, key):
            raise SystemExit("config: unknown key %r" % key)
        if getattr(args, key) is None:
            cur_type = {"wx": int, "wy": int, "r": int, "c": int, "i": int, "j": int,
                        "max_degree": int, "max_depth": int,
                        "target_i": int, "target_j": int}.get(key, str)
            try:
                setattr(args, key, cur_type(value))
            except ValueError:
                raise SystemExit("config %s: key %r needs an integer, got %r"
                                 % (args.config, key, value))


def _spec_from_args(args):
    wx = args.wx if args.wx is not None else 1
    wy = args.wy if args.wy is not None else 1
    family = args.family or "quantum"
    try:
        if family == "jordan":
            if wx != 1:
                raise SpecError("jordan-weight", "jordan family needs w_x = 1")
            return jordan_spec(wy)
        alpha = parse_cyclotomic(args.alpha) if args.alpha is not None else cyc(1)
        return quantum_spec(wx, wy, alpha)
    except (SpecError, ValueError) as exc:
        raise SystemExit("invalid algebra: %s" % exc)


def _action_from_args(spec, args, r_default=1):
    r = args.r if getattr(args, "r", None) is not None else r_default
    powers = getattr(args, "action_powers", None)
    try:
        if powers:
            px, py = (int(p) for p in powers.split(","))
            return make_diagonal_action(spec, r, px, py)
        return make_cyclic_group(spec, r)
    except ValueError as exc:
        raise SystemExit("invalid action: %s" % exc)


def _emit(args, text_lines, payload, default_format="text"):
    fmt = args.format or default_format
    if fmt == "json":
        body = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    else:
        body = "\n".join(text_lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def _emit_quiver(args, q, params):
    fmt = args.format or "text"
    if fmt == "dot":
        body = to_dot(q)
    elif fmt == "json":
        payload = {"command": "quiver", "params": params, "result": to_json_dict(q)}
        body = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    else:
        lines = ["vertices: %s" % " ".join(q.vertices)]
        for (s, t, tag) in q.arrows:
            lines.append("%s -> %s%s" % (s, t, " [%s]" % tag if tag else ""))
        body = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def cmd_info(args):
    spec = _spec_from_args(args)
    D = args.max_degree if args.max_degree is not None else 2 * spec.ell
    dims = hilbert_dims(spec, D)
    lines = [
        "algebra: %s" % spec.describe(),
        "ell=%d" % spec.ell,
        "hilbert dims (d=0..%d): %s" % (D, dims),
    ]
    payload = {
        "command": "info",
        "params": {"wx": spec.w_x, "wy": spec.w_y, "family": spec.family,
                   "alpha": str(spec.alpha) if spec.alpha is not None else None,
                   "max_degree": D},
        "result": {"ell": spec.ell, "hilbert_dims": dims},
    }
    _emit(args, lines, payload)
    return 0


def _build_sigma(spec, args):
    a = parse_cyclotomic(args.a) if args.a is not None else cyc(1)
    b = parse_cyclotomic(args.b) if args.b is not None else cyc(0)
    c = parse_cyclotomic(args.c) if args.c is not None else cyc(0)
    d = parse_cyclotomic(args.d) if args.d is not None else cyc(1)
    if spec.family == "jordan":
        return triangular_automorphism(spec, a, c, a ** spec.q)
    if (spec.w_x, spec.w_y) == (1, 1):
        return linear_automorphism(spec, a, b, c, d)
    if spec.w_x == 1:
        return triangular_automorphism(spec, a, c, d)
    return diagonal_automorphism(spec, a, d)


def cmd_hdet(args):
    spec = _spec_from_args(args)
    try:
        sigma = _build_sigma(spec, args)
    except (ValueError, ZeroDivisionError) as exc:
        raise SystemExit("invalid automorphism parameters: %s" % exc)
    if not is_graded_automorphism(sigma, spec):
        raise SystemExit("the given images do not define a graded automorphism "
                         "(relation not preserved or map not invertible)")
    methods = {}
    try:
        methods["table"] = hdet_table(sigma, spec)
    except NotTabulatedError as exc:
        raise SystemExit("automorphism not of a classified form: %s" % exc)
    try:
        methods["normal-recursion"] = hdet_normal_recursion(sigma, spec)
    except NotApplicableError:
        pass
    if (spec.w_x, spec.w_y) == (1, 1):
        methods["koszul-dual"] = hdet_koszul(sigma, spec)
    values = list(methods.values())
    agree = all(v == values[0] for v in values)
    in_hsl = values[0].is_one()
    lines = ["algebra: %s" % spec.describe()]
    for name in sorted(methods):
        lines.append("hdet (%s) = %s" % (name, methods[name]))
    lines.append("methods agree: %s" % ("yes" if agree else "NO"))
    lines.append("in HSL: %s" % ("yes" if in_hsl else "no"))
    payload = {
        "command": "hdet",
        "params": {k: getattr(args, k) for k in ("a", "b", "c", "d")},
        "result": {"hdet": {k: str(v) for k, v in methods.items()},
                   "agree": agree, "hsl": in_hsl},
    }
    _emit(args, lines, payload)
    return 0 if agree else 1


def cmd_fixed(args):
    spec = _spec_from_args(args)
    action = _action_from_args(spec, args)
    D = args.max_degree if args.max_degree is not None else 12
    dims = fixed_ring_dims(spec, action, D)
    mdims = molien_dims(spec, action, D)
    ok = dims == mdims
    lines = [
        "algebra: %s" % spec.describe(),
        "action: %s" % action.describe(),
        "fixed dims (d=0..%d): %s" % (D, dims),
        "trace-average dims:    %s" % mdims,
        "agreement: %s" % ("yes" if ok else "NO"),
    ]
    payload = {
        "command": "fixed",
        "params": {"r": action.r, "max_degree": D},
        "result": {"fixed_dims": dims, "molien_dims": mdims, "agree": ok},
    }
    _emit(args, lines, payload)
    return 0 if ok else 1


def cmd_ample(args):
    spec = _spec_from_args(args)
    action = _action_from_args(spec, args)
    rep = ampleness_report(spec, action, args.max_degree)
    payload = {
        "command": "ample",
        "params": {"r": action.r, "max_degree": rep.D,
                   "action_powers": [action.px, action.py]},
        "result": {
            "dims": rep.dims, "verdict": rep.verdict, "hsl": rep.hsl,
            "first_zero_degree": rep.first_zero_degree, "total_dim": rep.total_dim,
        },
    }
    _emit(args, rep.lines(), payload)
    return 0


def cmd_quiver(args):
    spec = None
    if args.kind in ("qs", "qsg", "covering"):
        spec = _spec_from_args(args)
    if args.kind == "qs":
        q = quiver_qs(spec)
        params = {"kind": "qs", "wx": spec.w_x, "wy": spec.w_y}
    elif args.kind == "qsg":
        r = args.r if args.r is not None else 1
        q = quiver_qsg(spec, r)
        params = {"kind": "qsg", "wx": spec.w_x, "wy": spec.w_y, "r": r}
    elif args.kind == "covering":
        c = args.c if args.c is not None else 1
        q = covering_quiver(spec, c)
        params = {"kind": "covering", "wx": spec.w_x, "wy": spec.w_y, "c": c}
    else:
        if args.i is None or args.j is None:
            raise SystemExit("canonical quiver needs --i and --j")
        q = make_canonical_quiver(args.i, args.j)
        params = {"kind": "canonical", "i": args.i, "j": args.j}
    _emit_quiver(args, q, params)
    return 0


def cmd_reflect_at(args):
    spec = _spec_from_args(args)
    if args.kind == "qs":
        q = quiver_qs(spec)
    elif args.kind == "qsg":
        q = quiver_qsg(spec, args.r if args.r is not None else 1)
    else:
        q = covering_quiver(spec, args.c if args.c is not None else 1)
    try:
        refl = bgp_reflect(q, args.vertex)
    except ValueError as exc:
        raise SystemExit(str(exc))
    _emit_quiver(args, refl, {"kind": args.kind, "vertex": args.vertex})
    return 0


def cmd_reflect_search(args):
    spec = _spec_from_args(args)
    c = args.c if args.c is not None else 1
    source = covering_quiver(spec, c)
    target = make_canonical_quiver(args.target_i, args.target_j)
    seq = reflection_search(source, target, args.max_depth)
    if seq is None:
        lines = ["no reflection sequence found"]
        payload = {"command": "reflect-search", "result": {"found": False}}
        _emit(args, lines, payload)
        return 1
    state = source
    for v in seq:
        state = bgp_reflect(state, v)
    verified = quiver_isomorphic(state, target) is not None
    lines = [
        "source: covering c=%d of weights (%d, %d)" % (c, spec.w_x, spec.w_y),
        "target: canonical (%d, %d)" % (args.target_i, args.target_j),
        "reflection sequence (%d steps): %s" % (len(seq), " ".join(seq) if seq else "(empty)"),
        "replay verified: %s" % ("yes" if verified else "NO"),
    ]
    payload = {
        "command": "reflect-search",
        "params": {"c": c, "target": [args.target_i, args.target_j]},
        "result": {"found": True, "sequence": seq, "verified": verified},
    }
    _emit(args, lines, payload)
    return 0 if verified else 1


def cmd_check(args):
    spec = _spec_from_args(args)
    action = _action_from_args(spec, args)
    r = action.r
    D = args.max_degree if args.max_degree is not None else 8
    results = []

    def record(name, ok, detail=""):
        results.append((name, bool(ok), detail))

    e = idempotent_e(action)
    record("idempotent e^2 = e", skew_mul(e, e, action) == e)
    rhos = rho_idempotents(action)
    ortho = all(
        (skew_mul(rhos[i], rhos[j], action) == rhos[i]) == (i == j)
        and (i == j or skew_mul(rhos[i], rhos[j], action).is_zero())
        for i in range(r) for j in range(r)
    )
    total = SkewElement.zero(action)
    for rho in rhos:
        total = total + rho
    record("rho idempotents orthogonal and complete",
           ortho and total == SkewElement.one(action))

    record("corner dimension identities (d <= %d)" % D,
           corner_dimension_checks(spec, action, D)["ok"])
    record("trace-average fixed dims (d <= %d)" % D, molien_check(spec, action, D))
    d_phi = min_phi_degree(spec, action)
    record("operator-representation injectivity (d <= %d)" % d_phi,
           phi_injectivity_check(spec, action, d_phi))

    comps = components(quiver_qsg(spec, r))
    n_expected = gcd(spec.ell, r)
    c_expected = lcm(spec.ell, r) // spec.ell
    cover = covering_quiver(spec, c_expected)
    decomposition_ok = len(comps) == n_expected and all(
        quiver_isomorphic(comp, cover, respect_tags=True) is not None for comp in comps
    )
    record("skew quiver decomposes into %d copies of the %d-covering"
           % (n_expected, c_expected), decomposition_ok)
    record("component canonical type (%d, %d)"
           % (c_expected * spec.w_x, c_expected * spec.w_y),
           all(canonical_type(comp) == (c_expected * spec.w_x, c_expected * spec.w_y)
               for comp in comps))

    record("dim Lambda = r * dim nabla", lambda_dim(action) == r * nabla_dim(spec)
           and nabla_skew_dim_formula(action) == lambda_dim(action))
    record("nabla path count identity", nabla_dim(spec) == path_count(quiver_qs(spec)))
    record("Lambda idempotent system basic", idempotent_system_report(action)["ok"])
    if spec.ell * r <= 36:
        oracle = gabriel_quiver_oracle(spec, action)
        record("Gabriel oracle matches skew quiver",
               quiver_isomorphic(oracle, quiver_qsg(spec, r)) is not None)
    if lambda_dim(action) <= 60:
        record("skew-of-nabla structure constants", nabla_skew_structure_check(action))

    ok_all = all(ok for (_, ok, _) in results)
    lines = ["algebra: %s" % spec.describe(), "action: %s" % action.describe()]
    for (name, ok, detail) in results:
        lines.append("%-55s %s%s" % (name, "ok" if ok else "FAIL",
                                     (" " + detail) if detail else ""))
    lines.append("overall: %s" % ("ok" if ok_all else "FAIL"))
    payload = {
        "command": "check",
        "params": {"r": r, "max_degree": D},
        "result": {"checks": [{"name": n, "ok": o} for (n, o, _) in results],
                   "ok": ok_all},
    }
    _emit(args, lines, payload)
    return 0 if ok_all else 1


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    _apply_config(args)
    handlers = {
        "info": cmd_info,
        "hdet": cmd_hdet,
        "fixed": cmd_fixed,
        "ample": cmd_ample,
        "quiver": cmd_quiver,
        "check": cmd_check,
    }
    if args.command == "reflect":
        handler = cmd_reflect_at if args.mode == "at" else cmd_reflect_search
    else:
        handler = handlers[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
