"""Command line front end.

Every command reads one or more JSON documents and prints one canonical JSON
document per input, in order.  Canonical means: fixed key order, two-space
indentation, a single trailing newline, and every list that denotes a *set*
of vectors (generators, rays, Hilbert basis elements, solution pairs) sorted
lexicographically.  Lists whose order is semantic — images per input
generator, matrix rows, relation columns — keep their computed order.  Equal
inputs therefore produce byte-identical outputs.

Exit codes:
  0  success
  1  usage error or malformed / ill-typed input document
  2  domain error: a well-formed input outside an operation's precondition
  3  internal consistency check failed (a bug in this package)

Warnings (non-primitive rays scaled down, generator spans re-presented) go
to stderr and never affect the output bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cone_complex as cc
from . import exact_lattice as xl
from . import log_hom_analysis as lha
from . import log_ideal_blowup as lib
from . import monoid_core as mc
from .errors import DomainError, InputError, InternalCheckError

# ---------------------------------------------------------------------------
# document loading


def _load_doc(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputError(f"{path}: top-level value must be a JSON object")
    if "kind" not in doc:
        raise InputError(f"{path}: document is missing its \"kind\" field")
    return doc


def _get(obj, key, ctx):
    if not isinstance(obj, dict) or key not in obj:
        raise InputError(f"{ctx}: missing field {key!r}")
    return obj[key]


def _as_int(x, ctx):
    if isinstance(x, bool) or not isinstance(x, int):
        raise InputError(f"{ctx}: expected an integer, got {x!r}")
    return x


def _as_vector(x, length, ctx):
    if not isinstance(x, list):
        raise InputError(f"{ctx}: expected a list of integers, got {x!r}")
    vec = tuple(_as_int(v, ctx) for v in x)
    if length is not None and len(vec) != length:
        raise InputError(
            f"{ctx}: expected a vector of length {length}, got {list(vec)}")
    return vec


def _as_vector_list(x, length, ctx):
    if not isinstance(x, list):
        raise InputError(f"{ctx}: expected a list of vectors")
    return [_as_vector(v, length, f"{ctx}[{i}]") for i, v in enumerate(x)]


def _expect_kind(doc, kinds, ctx):
    kind = doc.get("kind") if isinstance(doc, dict) else None
    if kind not in kinds:
        wanted = " or ".join(sorted(kinds))
        raise InputError(f"{ctx}: expected a {wanted} document, got kind {kind!r}")
    return kind


# ---------------------------------------------------------------------------
# parsers per document kind


def parse_presentation(doc, ctx):
    _expect_kind(doc, {"monoid-presentation"}, ctx)
    ngens = _as_int(_get(doc, "ngens", ctx), f"{ctx}.ngens")
    raw = _get(doc, "relations", ctx)
    if not isinstance(raw, list):
        raise InputError(f"{ctx}.relations: expected a list of [u, v] pairs")
    rels = []
    for i, pair in enumerate(raw):
        if not isinstance(pair, list) or len(pair) != 2:
            raise InputError(
                f"{ctx}.relations[{i}]: expected a pair [u, v] of exponent vectors")
        u = _as_vector(pair[0], ngens, f"{ctx}.relations[{i}][0]")
        v = _as_vector(pair[1], ngens, f"{ctx}.relations[{i}][1]")
        rels.append((u, v))
    return mc.MonoidPresentation(ngens, tuple(rels))


def parse_monoid(doc, ctx, warn):
    _expect_kind(doc, {"affine-monoid"}, ctx)
    free_rank = _as_int(_get(doc, "free_rank", ctx), f"{ctx}.free_rank")
    if free_rank < 0:
        raise InputError(f"{ctx}.free_rank: must be nonnegative")
    torsion = tuple(
        _as_int(f, f"{ctx}.torsion") for f in _get(doc, "torsion", ctx))
    host = xl.FgAbelianGroup(free_rank, torsion)
    vecs = _as_vector_list(
        _get(doc, "generators", ctx), host.lift_dim, f"{ctx}.generators")
    if vecs:
        quot, _ = xl.quotient_presentation(host, vecs)
        represented = not quot.is_trivial
    else:
        represented = host.lift_dim > 0
    monoid, _ = mc.span_submonoid(host, vecs)
    if represented:
        warn(f"{ctx}: generators span a proper subgroup of the written "
             f"ambient group; the monoid was re-presented inside its own "
             f"Grothendieck group")
    return monoid


def _monoid_input(doc, ctx, warn):
    """Affine monoid from either document kind (presentations are
    integralized first)."""
    kind = _expect_kind(doc, {"affine-monoid", "monoid-presentation"}, ctx)
    if kind == "monoid-presentation":
        return mc.integralize(parse_presentation(doc, ctx))
    return parse_monoid(doc, ctx, warn)


def _parse_rays(doc, ctx, warn):
    dim = _as_int(_get(doc, "dim", ctx), f"{ctx}.dim")
    if dim < 0:
        raise InputError(f"{ctx}.dim: must be nonnegative")
    rays = _as_vector_list(_get(doc, "rays", ctx), dim, f"{ctx}.rays")
    for r in rays:
        if any(r) and cc.primitive(r) != r:
            warn(f"{ctx}: ray {list(r)} is not primitive; "
                 f"scaled to {list(cc.primitive(r))}")
    return rays, dim


def parse_cone(doc, ctx, warn):
    _expect_kind(doc, {"cone"}, ctx)
    rays, dim = _parse_rays(doc, ctx, warn)
    return cc.RationalCone.from_rays(rays, dim)


def parse_fan(doc, ctx, warn):
    _expect_kind(doc, {"fan"}, ctx)
    dim = _as_int(_get(doc, "dim", ctx), f"{ctx}.dim")
    if dim < 0:
        raise InputError(f"{ctx}.dim: must be nonnegative")
    raw = _get(doc, "maximal_cones", ctx)
    if not isinstance(raw, list):
        raise InputError(f"{ctx}.maximal_cones: expected a list of ray lists")
    cones = []
    for i, rays in enumerate(raw):
        sub = f"{ctx}.maximal_cones[{i}]"
        vecs = _as_vector_list(rays, dim, sub)
        for r in vecs:
            if any(r) and cc.primitive(r) != r:
                warn(f"{sub}: ray {list(r)} is not primitive; "
                     f"scaled to {list(cc.primitive(r))}")
        cones.append(cc.RationalCone.from_rays(vecs, dim))
    return cc.fan_from_cones(cones, dim, validate=True)


def parse_hom(doc, ctx, warn):
    _expect_kind(doc, {"hom"}, ctx)
    source = parse_monoid(_get(doc, "source", ctx), f"{ctx}.source", warn)
    target = parse_monoid(_get(doc, "target", ctx), f"{ctx}.target", warn)
    raw = _get(doc, "matrix", ctx)
    if not isinstance(raw, list):
        raise InputError(f"{ctx}.matrix: expected a list of rows")
    n_rows = target.ambient.lift_dim
    n_cols = source.ambient.lift_dim
    if len(raw) != n_rows:
        raise InputError(
            f"{ctx}.matrix: expected {n_rows} rows (target lift "
            f"coordinates), got {len(raw)}")
    rows = [_as_vector(r, n_cols, f"{ctx}.matrix[{i}]")
            for i, r in enumerate(raw)]
    try:
        return lha.MonoidHom(source, target, rows)
    except DomainError as exc:
        # an ill-typed document, not a precondition failure: the matrix does
        # not describe a homomorphism of the monoids the document declares
        raise InputError(f"{ctx}: not a monoid homomorphism: {exc}") from exc


def parse_ideal(doc, ctx, warn):
    _expect_kind(doc, {"ideal"}, ctx)
    host = parse_monoid(_get(doc, "monoid", ctx), f"{ctx}.monoid", warn)
    vecs = _as_vector_list(_get(doc, "generators", ctx),
                           host.ambient.lift_dim, f"{ctx}.generators")
    try:
        return lib.MonoidIdeal(host, tuple(host.element(v) for v in vecs))
    except DomainError as exc:
        raise InputError(f"{ctx}: not an ideal of the given monoid: {exc}") from exc


def _hom_pair(doc, ctx, warn, shared):
    left = parse_hom(_get(doc, "left", ctx), f"{ctx}.left", warn)
    right = parse_hom(_get(doc, "right", ctx), f"{ctx}.right", warn)
    if shared == "source" and left.source != right.source:
        raise InputError(f"{ctx}: the two legs must share their source monoid")
    if shared == "target" and left.target != right.target:
        raise InputError(f"{ctx}: the two legs must share their target monoid")
    return left, right


# ---------------------------------------------------------------------------
# canonical emission


def _vec(v):
    return [int(x) for x in v]


def _sorted_vecs(vectors):
    return [_vec(v) for v in sorted(tuple(int(x) for x in v) for v in vectors)]


def group_block(group):
    return {"free_rank": int(group.free_rank),
            "invariant_factors": [int(f) for f in group.invariant_factors]}


def monoid_block(monoid):
    return {"kind": "affine-monoid",
            "free_rank": int(monoid.ambient.free_rank),
            "torsion": [int(f) for f in monoid.ambient.invariant_factors],
            "generators": _sorted_vecs(g.as_vector() for g in monoid.generators)}


def cone_block(cone):
    return {"kind": "cone",
            "dim": int(cone.dim),
            "rays": _sorted_vecs(cone.generators)}


def fan_block(fan):
    return {"kind": "fan",
            "dim": int(fan.dim),
            "maximal_cones": [_sorted_vecs(c.generators)
                              for c in fan.maximal_cones]}


def presentation_block(pres):
    return {"kind": "monoid-presentation",
            "ngens": int(pres.ngens),
            "relations": [[_vec(u), _vec(v)] for (u, v) in pres.relations]}


def _emit(doc):
    return json.dumps(doc, indent=2) + "\n"


# ---------------------------------------------------------------------------
# shared verification helpers (--verify)


def _check(cond, msg):
    if not cond:
        raise InternalCheckError(f"verification failed: {msg}")


def _group_combo(group, coeffs, elements):
    acc = group.zero()
    for c, el in zip(coeffs, elements):
        if c:
            acc = group.add(acc, group.scale(c, el.as_vector()))
    return tuple(int(x) for x in acc)


def _verify_relations_hold(group, images, relations, what):
    for (u, v) in relations:
        _check(_group_combo(group, u, images) == _group_combo(group, v, images),
               f"{what}: images violate the relation {list(u)} = {list(v)}")


# ---------------------------------------------------------------------------
# command handlers: (doc, path, args, warn) -> JSON-ready dict


def _h_gp(doc, path, args, warn):
    kind = _expect_kind(doc, {"monoid-presentation", "affine-monoid"}, path)
    if kind == "monoid-presentation":
        pres = parse_presentation(doc, path)
        group, images = mc.grothendieck_group(pres)
        if args.verify:
            _verify_relations_hold(group, images, pres.relations,
                                   "grothendieck group")
    else:
        monoid = parse_monoid(doc, path, warn)
        group, images = monoid.ambient, monoid.generators
    out = {"kind": "abelian-group"}
    out.update(group_block(group))
    out["generator_images"] = [_vec(im.as_vector()) for im in images]
    return out


def _h_int(doc, path, args, warn):
    pres = parse_presentation(doc, path)
    monoid = mc.integralize(pres)
    if args.verify:
        _, images = mc.grothendieck_group(pres)
        _verify_relations_hold(monoid.ambient, images, pres.relations,
                               "integralization")
    return monoid_block(monoid)


def _h_sat(doc, path, args, warn):
    monoid = _monoid_input(doc, path, warn)
    sat = mc.saturate(monoid)
    if args.verify:
        _check(mc.is_saturated(sat), "saturation is not saturated")
        _check(all(sat.contains(g) for g in monoid.generators),
               "saturation does not contain the original monoid")
    return monoid_block(sat)


def _h_sharpen(doc, path, args, warn):
    monoid = _monoid_input(doc, path, warn)
    sharp = mc.sharpen(monoid)
    us = mc.units(monoid)
    if args.verify:
        _check(not mc.units(sharp), "sharpening still has units")
        _check(all(monoid.contains(monoid.neg(u)) for u in us),
               "a reported unit is not invertible")
    return {"kind": "sharpen-result",
            "units": _sorted_vecs(u.as_vector() for u in us),
            "monoid": monoid_block(sharp)}


def _h_spec(doc, path, args, warn):
    monoid = _monoid_input(doc, path, warn)
    primes = mc.spec(monoid)
    if args.verify:
        face_sets = [frozenset(p.complement_face) for p in primes]
        _check(frozenset(range(len(monoid.generators))) in face_sets,
               "the improper face (all generators) is missing")
        _check(len(set(face_sets)) == len(face_sets), "duplicate faces")
        for a in face_sets:
            for b in face_sets:
                _check(a & b in face_sets,
                       "faces are not closed under intersection")
    return {"kind": "spectrum",
            "count": len(primes),
            "primes": [{"complement_face": [int(i) for i in p.sorted_indices()]}
                       for p in primes]}


def _h_props(doc, path, args, warn):
    monoid = _monoid_input(doc, path, warn)
    pred = mc.predicates(monoid)
    if args.verify:
        _check(not pred.is_toric or (pred.is_sharp and pred.is_saturated),
               "toric verdict without sharp + saturated")
        _check(not pred.is_free or pred.is_saturated,
               "free verdict without saturation")
    return {"kind": "predicates",
            "is_sharp": pred.is_sharp,
            "is_saturated": pred.is_saturated,
            "is_toric": pred.is_toric,
            "is_free": pred.is_free}


def _h_rank(doc, path, args, warn):
    monoid = _monoid_input(doc, path, warn)
    rank = mc.characteristic_rank(monoid)
    if args.verify:
        _check(rank == mc.sharpen(monoid).ambient.free_rank,
               "characteristic rank does not match the sharpening")
    return {"kind": "characteristic-rank", "rank": int(rank)}


def _h_pushout(doc, path, args, warn):
    _expect_kind(doc, {"pushout-request"}, path)
    left, right = _hom_pair(doc, path, warn, shared="source")
    if args.mode == "presentation":
        pres = mc.pushout(left, right, "presentation")
        if args.verify:
            _check(pres.ngens == len(left.target.generators) +
                   len(right.target.generators),
                   "presentation pushout has the wrong generator count")
        return presentation_block(pres)
    result = mc.pushout_with_maps(left, right)
    monoid = result.monoid if args.mode == "fine" else mc.saturate(result.monoid)
    if args.verify:
        amb = result.monoid.ambient
        for l_gen in left.source.generators:
            via_m = left.apply(l_gen)
            via_n = right.apply(l_gen)
            lm = _push_image(result.left_matrix, via_m, amb)
            rm = _push_image(result.right_matrix, via_n, amb)
            _check(lm == rm, "pushout square does not commute")
        if args.mode == "fs":
            _check(mc.is_saturated(monoid), "fs pushout is not saturated")
    out = {"kind": "pushout-result", "mode": args.mode}
    out["monoid"] = monoid_block(monoid)
    out["left_images"] = [_vec(im.as_vector()) for im in result.left_images]
    out["right_images"] = [_vec(im.as_vector()) for im in result.right_images]
    return out


def _push_image(matrix, elem, group):
    vec = elem.as_vector()
    out = [0] * group.lift_dim
    for i in range(group.lift_dim):
        out[i] = sum(int(matrix[i, j]) * vec[j] for j in range(len(vec)))
    return tuple(int(x) for x in group.reduce_vector(tuple(out)))


def _h_fiber(doc, path, args, warn):
    _expect_kind(doc, {"fiber-request"}, path)
    left, right = _hom_pair(doc, path, warn, shared="target")
    pairs = mc.fiber_product_generators(left, right)
    monoid = mc.fiber_product(left, right)
    if args.verify:
        for (m_el, n_el) in pairs:
            _check(left.apply(m_el) == right.apply(n_el),
                   "fiber pair does not equalize the two legs")
            _check(left.source.contains(m_el) and right.source.contains(n_el),
                   "fiber pair leaves the factors")
    emitted = sorted((m.as_vector(), n.as_vector()) for (m, n) in pairs)
    return {"kind": "fiber-result",
            "pairs": [[_vec(m), _vec(n)] for (m, n) in emitted],
            "monoid": monoid_block(monoid)}


def _h_dual(doc, path, args, warn):
    cone = parse_cone(doc, path, warn)
    dual = cc.dual_cone(cone)
    if args.verify:
        _check(cc.dual_cone(dual) == cone, "double dual differs from the cone")
    return cone_block(dual)


def _h_faces(doc, path, args, warn):
    cone = parse_cone(doc, path, warn)
    face_list = cc.faces(cone)
    if args.verify:
        for f in face_list:
            _check(cc.is_face_of(f, cone), "listed face is not a face")
        if len(face_list) <= 24:
            for a in face_list:
                for b in face_list:
                    _check(cc.intersect(a, b) in face_list,
                           "faces are not closed under intersection")
    return {"kind": "face-list",
            "count": len(face_list),
            "faces": [{"dimension": int(f.span_dim),
                       "rays": _sorted_vecs(f.generators)}
                      for f in face_list]}


def _h_hilbert(doc, path, args, warn):
    cone = parse_cone(doc, path, warn)
    basis = cc.hilbert_basis(cone)
    if args.verify:
        for h in basis:
            _check(cone.contains(h), "Hilbert basis element outside the cone")
        for h in basis:
            for k in basis:
                if h != k:
                    diff = tuple(a - b for a, b in zip(h, k))
                    _check(not (any(diff) and cone.contains(diff)),
                           "Hilbert basis element is reducible")
    return {"kind": "hilbert-basis",
            "count": len(basis),
            "vectors": _sorted_vecs(basis)}


def _h_regular(doc, path, args, warn):
    kind = _expect_kind(doc, {"cone", "fan"}, path)
    if kind == "cone":
        cone = parse_cone(doc, path, warn)
        verdict = cc.is_regular(cone)
        if args.verify and cone.is_simplicial and cone.is_strongly_convex:
            _check(verdict == (cc.multiplicity(cone) == 1),
                   "regularity disagrees with multiplicity")
    else:
        fan = parse_fan(doc, path, warn)
        verdict = fan.is_regular()
        if args.verify:
            _check(verdict == all(cc.is_regular(c) for c in fan.maximal_cones),
                   "fan regularity disagrees with its cones")
    return {"kind": "regularity", "is_regular": bool(verdict)}


def _h_mult(doc, path, args, warn):
    cone = parse_cone(doc, path, warn)
    m = cc.multiplicity(cone)
    if args.verify:
        _check(m >= 1, "multiplicity below one")
        _check((m == 1) == cc.is_regular(cone),
               "multiplicity one disagrees with regularity")
    return {"kind": "multiplicity", "multiplicity": int(m)}


def _h_resolve(doc, path, args, warn):
    kind = _expect_kind(doc, {"cone", "fan"}, path)
    if kind == "cone":
        cone = parse_cone(doc, path, warn)
        fan = cc.fan_from_cones([cone], cone.dim, validate=True)
    else:
        fan = parse_fan(doc, path, warn)
    resolved = cc.resolve(fan)
    if args.verify:
        _check(resolved.is_regular(), "resolution is not regular")
        for c in fan.maximal_cones:
            for r in c.extreme_rays:
                _check(resolved.support_contains(r),
                       "resolution lost part of the support")
    return fan_block(resolved)


def _h_blowup(doc, path, args, warn):
    ideal = parse_ideal(doc, path, warn)
    charts = lib.blowup_charts(ideal.host, ideal)
    idempotent = lib.blowup_is_idempotent(ideal.host, ideal)
    if args.verify:
        for chart in charts:
            for g in ideal.host.generators:
                _check(chart.fine.contains(g.as_vector()),
                       "blowup chart does not contain the host monoid")
            _check(mc.is_saturated(chart.fs), "fs chart is not saturated")
    return {"kind": "blowup-charts",
            "count": len(charts),
            "idempotent": bool(idempotent),
            "charts": [{"center": _vec(chart.center.as_vector()),
                        "fine": monoid_block(chart.fine),
                        "fs": monoid_block(chart.fs)}
                       for chart in charts]}


def _h_blowup_fan(doc, path, args, warn):
    ideal = parse_ideal(doc, path, warn)
    fan = lib.blowup_fan(ideal.host, ideal)
    if args.verify:
        sigma = cc.dual_cone(cc.RationalCone.from_rays(
            [g.free for g in ideal.host.generators],
            ideal.host.ambient.free_rank))
        for c in fan.maximal_cones:
            _check(sigma.contains_cone(c),
                   "blowup fan leaves the dual cone of the host")
    return fan_block(fan)


def _h_hom_check(doc, path, args, warn):
    hom = parse_hom(doc, path, warn)
    verdict = lha.kato_criterion(hom, residue_char=args.char)
    if args.verify:
        _check(not verdict.is_etale or verdict.is_smooth,
               "etale verdict without smoothness")
    return {"kind": "smoothness-verdict",
            "residue_char": int(verdict.residue_char),
            "monoid_side_only": True,
            "is_smooth": verdict.is_smooth,
            "is_etale": verdict.is_etale,
            "gp_kernel": group_block(verdict.gp_kernel),
            "gp_cokernel": group_block(verdict.gp_cokernel)}


def _h_kummer(doc, path, args, warn):
    hom = parse_hom(doc, path, warn)
    kummer = lha.is_kummer(hom)
    injective = lha.is_gp_injective(hom)
    relchar = lha.relative_characteristic(hom)
    if args.verify:
        _check(not kummer or injective, "Kummer verdict without injectivity")
    return {"kind": "kummer-verdict",
            "is_kummer": bool(kummer),
            "gp_injective": bool(injective),
            "relative_characteristic": monoid_block(relchar)}


def _h_neat(doc, path, args, warn):
    hom = parse_hom(doc, path, warn)
    cls = lha.neat_chart_class(hom, residue_char=args.char)
    if args.verify:
        _check(cls in ("zariski", "etale", "fppf"), "unknown chart class")
    return {"kind": "neat-chart-class",
            "residue_char": int(args.char),
            "class": cls}


def _h_diff_rank(doc, path, args, warn):
    hom = parse_hom(doc, path, warn)
    rank = lha.differential_rank(hom, residue_char=args.char)
    if args.verify:
        _check(rank >= lha.gp_cokernel(hom).free_rank,
               "differential rank below the cokernel free rank")
    return {"kind": "differential-rank",
            "residue_char": int(args.char),
            "rank": int(rank),
            "gp_injective": lha.is_gp_injective(hom),
            "monoid_kernel_trivial": lha.monoid_kernel_trivial(hom)}


def _h_diff_pres(doc, path, args, warn):
    hom = parse_hom(doc, path, warn)
    pres = lha.universal_differential_presentation(hom)
    if args.verify:
        module, _ = xl.group_from_relations(
            len(pres.symbols), list(pres.relation_columns))
        _check(module == pres.module,
               "module does not match its own presentation")
    return {"kind": "differential-presentation",
            "coefficient_ring": pres.coefficient_ring,
            "symbols": list(pres.symbols),
            "relations": [_vec(c) for c in pres.relation_columns],
            "module": group_block(pres.module)}


_HANDLERS = {
    "gp": _h_gp,
    "int": _h_int,
    "sat": _h_sat,
    "sharpen": _h_sharpen,
    "spec": _h_spec,
    "props": _h_props,
    "rank": _h_rank,
    "pushout": _h_pushout,
    "fiber": _h_fiber,
    "dual": _h_dual,
    "faces": _h_faces,
    "hilbert": _h_hilbert,
    "regular": _h_regular,
    "mult": _h_mult,
    "resolve": _h_resolve,
    "blowup": _h_blowup,
    "blowup-fan": _h_blowup_fan,
    "hom-check": _h_hom_check,
    "kummer": _h_kummer,
    "neat": _h_neat,
    "diff-rank": _h_diff_rank,
    "diff-pres": _h_diff_pres,
}

_HELP = {
    "gp": "Grothendieck group of a presented or affine monoid",
    "int": "integralization of a monoid presentation",
    "sat": "saturation of a fine monoid",
    "sharpen": "units and sharp quotient of a fine monoid",
    "spec": "prime spectrum (faces) of a fine monoid",
    "props": "sharp / saturated / toric / free predicates",
    "rank": "rank of the sharpened characteristic monoid",
    "pushout": "pushout of two homs out of a shared source",
    "fiber": "fiber product of two homs into a shared target",
    "dual": "dual cone",
    "faces": "face lattice of a cone",
    "hilbert": "Hilbert basis of a pointed cone",
    "regular": "regularity of a cone or fan",
    "mult": "multiplicity of a simplicial cone",
    "resolve": "subdivide a fan until it is regular",
    "blowup": "blowup charts of a monoid ideal",
    "blowup-fan": "fan of the blowup of a toric monoid ideal",
    "hom-check": "Kato smoothness / etaleness of a hom (monoid side only)",
    "kummer": "Kummer verdict and relative characteristic of a hom",
    "neat": "how locally a neat chart exists: zariski / etale / fppf",
    "diff-rank": "rank of the universal log differential module",
    "diff-pres": "symbolic presentation of the log differential module",
}

_WITH_MODE = {"pushout"}
_WITH_CHAR = {"hom-check", "neat", "diff-rank"}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="logmonoid",
        description="exact computations on fine monoids, cones, fans, "
                    "monoid ideals and their homomorphisms")
    parser.add_argument("--version", action="version",
                        version="%(prog)s " + _version())
    sub = parser.add_subparsers(dest="command", required=True,
                                metavar="command")
    for name, handler in _HANDLERS.items():
        sp = sub.add_parser(name, help=_HELP[name], description=_HELP[name])
        if name in _WITH_MODE:
            sp.add_argument("--mode", choices=("presentation", "fine", "fs"),
                            default="fine",
                            help="pushout flavour (default: fine)")
        if name in _WITH_CHAR:
            sp.add_argument("--char", type=int, default=0, metavar="P",
                            help="residue characteristic, 0 or a prime "
                                 "(default: 0)")
        sp.add_argument("--verify", action="store_true",
                        help="re-check the result against independent "
                             "predicates before printing")
        sp.add_argument("--out", metavar="FILE",
                        help="write the output to FILE instead of stdout")
        sp.add_argument("files", nargs="+", metavar="FILE",
                        help="input JSON document(s)")
    return parser


def _version():
    from . import __version__
    return __version__


def _warn(msg):
    print(f"warning: {msg}", file=sys.stderr)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; the documented usage code is 1
        code = exc.code if isinstance(exc.code, int) else 1
        return 0 if code == 0 else 1
    try:
        outputs = []
        for path in args.files:
            doc = _load_doc(path)
            result = _HANDLERS[args.command](doc, path, args, _warn)
            outputs.append(_emit(result))
            if args.verify:
                print(f"verify: {args.command} {path}: ok", file=sys.stderr)
        text = "".join(outputs)
        if args.out:
            try:
                with open(args.out, "w", encoding="utf-8", newline="") as fh:
                    fh.write(text)
            except OSError as exc:
                raise InputError(f"cannot write {args.out}: {exc}") from exc
        else:
            sys.stdout.write(text)
        return 0
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2
    except InternalCheckError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # pragma: no cover - safety net
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
