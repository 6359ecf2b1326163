"""k-uniform hypergraphs, their pattern dictionary, and finite witness
structures.

A k-hypergraph is realized by a set family when every k-subset of vertices has
intersecting sets exactly when it is a hyperedge and every clique's sets have
a common point.  This module provides the hypergraph <-> pattern translation,
a scalable realization checker and witness builder, the clique blowup that
reduces arity k+1 to arity k, two-sorted witness structures with their
universal-axiom checker and free amalgamation, and the triangle-free doubling
construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .bounds import CLIQUE_VERTICES, DOUBLING_VERTICES, enumeration_bound
from .errors import (
    ArityMismatch,
    AxiomViolation,
    BoundExceeded,
    IndexOutOfRange,
    NotAnEmbedding,
    NotReasonablePositive,
    PreconditionFailure,
    TriangleFound,
    UnsupportedParams,
    VerificationFailure,
)
from .patterns import Condition, Pattern, classify
from .semantics import SetFamily, check_exhibits


@dataclass(frozen=True)
class Hypergraph:
    """A k-uniform hypergraph on vertices [0, vertex_count)."""

    arity: int
    vertex_count: int
    edges: frozenset[frozenset[int]]

    def __post_init__(self):
        if self.arity < 2:
            raise UnsupportedParams("arity must be at least 2")
        if self.vertex_count < 0:
            raise UnsupportedParams("vertex count must be nonnegative")
        coerced = frozenset(frozenset(e) for e in self.edges)
        for edge in coerced:
            if len(edge) != self.arity:
                raise ArityMismatch(f"edge {sorted(edge)} is not a {self.arity}-subset")
            for v in edge:
                if not 0 <= v < self.vertex_count:
                    raise IndexOutOfRange(f"vertex {v} outside [0, {self.vertex_count})")
        object.__setattr__(self, "edges", coerced)


def graph(vertex_count: int, edges) -> Hypergraph:
    """An ordinary graph is the arity-2 case."""
    return Hypergraph(2, vertex_count, frozenset(frozenset(e) for e in edges))


def _bits(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def _clique_table(h: Hypergraph) -> list[bool]:
    """is_clique[mask] for every vertex subset: all arity-subsets are edges."""
    k = h.arity
    table = [False] * (1 << h.vertex_count)
    table[0] = True
    for mask in range(1, 1 << h.vertex_count):
        top = mask.bit_length() - 1
        rest = mask ^ (1 << top)
        if not table[rest]:
            continue
        members = _bits(rest)
        if len(members) + 1 < k:
            table[mask] = True
        else:
            table[mask] = all(
                frozenset(sub + (top,)) in h.edges
                for sub in itertools.combinations(members, k - 1)
            )
    return table


def maximal_cliques(h: Hypergraph) -> list[frozenset[int]]:
    """All maximal cliques, by branch-and-exclude search.

    Works without materializing the 2**v subset table, so it stays usable on
    the blown-up hypergraphs whose clique structure is block-shaped.  Dense
    regions collapse: once every remaining candidate fits, the node's unique
    maximal extension is members + candidates, reported unless an excluded
    vertex still fits.
    """
    k = h.arity
    edge_masks = {_vertex_mask(e) for e in h.edges}

    def compatible(v, members):
        if len(members) < k - 1:
            return True
        bit = 1 << v
        return all(
            _vertex_mask(sub) | bit in edge_masks
            for sub in itertools.combinations(members, k - 1)
        )

    def pool_is_clique(pool):
        if len(pool) < k:
            return True
        return all(
            _vertex_mask(sub) in edge_masks for sub in itertools.combinations(pool, k)
        )

    out: list[frozenset[int]] = []

    def extend(members, candidates, excluded):
        pool = members + tuple(sorted(candidates))
        if pool_is_clique(pool):
            if pool and not any(compatible(x, pool) for x in excluded):
                out.append(frozenset(pool))
            return
        for v in sorted(candidates):
            grown = members + (v,)
            extend(
                grown,
                {u for u in candidates if u != v and compatible(u, grown)},
                {u for u in excluded if compatible(u, grown)},
            )
            candidates = candidates - {v}
            excluded = excluded | {v}

    extend((), set(range(h.vertex_count)), set())
    return sorted(out, key=sorted)


def _vertex_mask(vertices) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def pattern_from_hypergraph(h: Hypergraph, bound: int | None = None) -> Pattern:
    """The realization pattern: every nonempty clique is consistent, every
    non-edge arity-subset is inconsistent.  Reasonable (a non-edge is never
    inside a clique), positive, and arity-bounded."""
    limit = enumeration_bound(CLIQUE_VERTICES) if bound is None else bound
    if h.vertex_count > limit:
        raise BoundExceeded(f"{h.vertex_count} vertices exceed clique-enumeration bound {limit}")
    table = _clique_table(h)
    consistency = tuple(
        Condition(_bits(mask), ()) for mask in range(1, 1 << h.vertex_count) if table[mask]
    )
    inconsistency = tuple(
        Condition(combo, ())
        for combo in itertools.combinations(range(h.vertex_count), h.arity)
        if frozenset(combo) not in h.edges
    )
    return Pattern(h.vertex_count, consistency, inconsistency)


def realize_check(fam: SetFamily, h: Hypergraph) -> bool:
    """Does fam realize h?  Equivalent to exhibiting pattern_from_hypergraph(h)
    but checked as: arity-subsets intersect iff they are edges, and every
    maximal clique has a common point (which covers all sub-cliques)."""
    if fam.n != h.vertex_count:
        raise ArityMismatch(f"family has {fam.n} sets, hypergraph has {h.vertex_count} vertices")
    for combo in itertools.combinations(range(h.vertex_count), h.arity):
        meet = fam.sets[combo[0]]
        for v in combo[1:]:
            meet &= fam.sets[v]
            if not meet:
                break
        if bool(meet) != (frozenset(combo) in h.edges):
            return False
    for clique in maximal_cliques(h):
        members = sorted(clique)
        meet = fam.sets[members[0]]
        for v in members[1:]:
            meet &= fam.sets[v]
        if not meet:
            return False
    return True


def realization_witness(h: Hypergraph) -> SetFamily:
    """A family realizing h: one point per maximal clique, set v = the maximal
    cliques through v.  Sub-cliques inherit the point of any maximal extension;
    a non-edge lies in no clique at all.  Self-verified."""
    cliques = maximal_cliques(h)
    if cliques:
        fam = SetFamily(
            len(cliques),
            tuple(
                frozenset(idx for idx, m in enumerate(cliques) if v in m)
                for v in range(h.vertex_count)
            ),
        )
    else:
        fam = SetFamily(1, tuple(frozenset() for _ in range(h.vertex_count)))
    if not realize_check(fam, h):
        raise VerificationFailure("maximal-clique witness failed realization check")
    return fam


# ---------------------------------------------------------------------------
# Blowup: arity k realization from arity k+1
# ---------------------------------------------------------------------------


def blowup(h: Hypergraph, bound: int | None = None):
    """Replace each vertex by a block of k+1 vertices; a (k+1)-subset of the
    new vertex set is an edge exactly when the blocks it touches form a clique
    of h.  In particular each block is an edge, and the union of the blocks of
    any h-clique is a clique of the blowup.  Returns (blown, grouping).
    """
    limit = enumeration_bound(CLIQUE_VERTICES) if bound is None else bound
    if h.vertex_count > limit:
        raise BoundExceeded(f"{h.vertex_count} vertices exceed blowup bound {limit}")
    k = h.arity
    n = h.vertex_count
    grouping = tuple(tuple(range(i * (k + 1), (i + 1) * (k + 1))) for i in range(n))
    block_of = [i for i in range(n) for _ in range(k + 1)]
    table = _clique_table(h)
    edges = []
    for combo in itertools.combinations(range((k + 1) * n), k + 1):
        spanned = 0
        for v in combo:
            spanned |= 1 << block_of[v]
        if table[spanned]:
            edges.append(frozenset(combo))
    return Hypergraph(k + 1, (k + 1) * n, frozenset(edges)), grouping


def blowup_pullback(fam: SetFamily, original: Hypergraph, grouping) -> SetFamily:
    """Collapse a family realizing blowup(original) back to the original:
    the set of vertex i is the intersection over its block.  Re-verified."""
    blown, expected = blowup(original)
    if tuple(tuple(b) for b in grouping) != expected:
        raise PreconditionFailure("grouping does not match the deterministic blowup grouping")
    if fam.n != blown.vertex_count or not realize_check(fam, blown):
        raise PreconditionFailure("family does not realize the blowup")
    sets = []
    for block in expected:
        meet = fam.universe
        for v in block:
            meet &= fam.sets[v]
        sets.append(meet)
    result = SetFamily(fam.universe_size, tuple(sets))
    if not realize_check(result, original):
        raise VerificationFailure("pullback failed to realize the original hypergraph")
    return result


# ---------------------------------------------------------------------------
# Two-sorted witness structures
# ---------------------------------------------------------------------------

POSITIVE_FLAVOR = "positive"
UNIFORM_FLAVOR = "k-uniform"


@dataclass(frozen=True)
class WitnessStructure:
    """Two disjoint sorts — witness points and parameter points — a relation r
    from witnesses to parameters, and hyperedges on the parameter sort only.

    The defining universal axiom: for every hyperedge E and witness x, not all
    of r(x, p), p in E, hold.  Structures are not validated on construction
    (deliberately, so broken ones can be fed to check_axioms); the builders
    below always validate their output.
    """

    witness_points: tuple[str, ...]
    parameter_points: tuple[str, ...]
    r: frozenset[tuple[int, int]]
    hyperedges: frozenset[frozenset[int]]
    flavor: str = POSITIVE_FLAVOR

    def __post_init__(self):
        object.__setattr__(self, "witness_points", tuple(self.witness_points))
        object.__setattr__(self, "parameter_points", tuple(self.parameter_points))
        object.__setattr__(self, "r", frozenset((int(w), int(p)) for w, p in self.r))
        object.__setattr__(self, "hyperedges", frozenset(frozenset(e) for e in self.hyperedges))

    def edges_by_arity(self) -> dict[int, frozenset[frozenset[int]]]:
        out: dict[int, set[frozenset[int]]] = {}
        for edge in self.hyperedges:
            out.setdefault(len(edge), set()).add(edge)
        return {k: frozenset(v) for k, v in sorted(out.items())}


@dataclass(frozen=True)
class AxiomReport:
    ok: bool
    violations: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def check_axioms(s: WitnessStructure) -> AxiomReport:
    """Full enumeration check of the sort/relation discipline and the
    no-witness-over-a-hyperedge axiom."""
    problems = []
    nw, np_ = len(s.witness_points), len(s.parameter_points)
    for w, p in sorted(s.r):
        if not 0 <= w < nw:
            problems.append(f"relation pair ({w},{p}) has no witness point {w}")
        if not 0 <= p < np_:
            problems.append(f"relation pair ({w},{p}) has no parameter point {p}")
    arities = set()
    for edge in sorted(s.hyperedges, key=sorted):
        if not edge:
            problems.append("empty hyperedge")
        arities.add(len(edge))
        for p in edge:
            if not 0 <= p < np_:
                problems.append(f"hyperedge {sorted(edge)} leaves the parameter sort")
    if s.flavor == UNIFORM_FLAVOR and len(arities) > 1:
        problems.append(f"uniform structure carries mixed arities {sorted(arities)}")
    for edge in sorted(s.hyperedges, key=sorted):
        for w in range(nw):
            if all((w, p) in s.r for p in edge):
                problems.append(
                    f"witness {w} is related to all of hyperedge {sorted(edge)}"
                )
    return AxiomReport(not problems, tuple(problems))


def witness_trace_family(s: WitnessStructure) -> SetFamily:
    """The relation's columns over the witness sort: one set per parameter
    point.  A dummy one-point universe stands in when there are no witnesses
    (set families must have nonempty universes)."""
    universe = max(1, len(s.witness_points))
    return SetFamily(
        universe,
        tuple(
            frozenset(w for w in range(len(s.witness_points)) if (w, p) in s.r)
            for p in range(len(s.parameter_points))
        ),
    )


def build_witness_structure(source, flavor: str | None = None) -> WitnessStructure:
    """Build the finite witness structure for a reasonable positive pattern or
    a hypergraph.

    Pattern flavor: one witness point per consistency condition, related to
    exactly the parameters of its positive part; one hyperedge per
    inconsistency condition.  Hypergraph flavor: the same applied to the
    realization pattern — witnesses are the nonempty cliques and hyperedges
    are the non-edges; all hyperedges share the hypergraph's arity.
    Reasonableness is exactly what makes the universal axiom hold; the output
    is checked and its relation columns must exhibit the source pattern.
    """
    if isinstance(source, Hypergraph):
        pattern = pattern_from_hypergraph(source)
        resolved = UNIFORM_FLAVOR
    elif isinstance(source, Pattern):
        pattern = source
        resolved = POSITIVE_FLAVOR
    else:
        raise UnsupportedParams(f"cannot build a witness structure from {type(source).__name__}")
    if flavor is not None and flavor != resolved:
        raise UnsupportedParams(f"{type(source).__name__} input builds the {resolved!r} flavor")
    flags = classify(pattern)
    if not (flags.reasonable and flags.positive):
        raise NotReasonablePositive("witness structures need a reasonable positive pattern")
    witnesses = tuple(f"w{i}" for i in range(len(pattern.consistency)))
    parameters = tuple(f"p{j}" for j in range(pattern.n))
    relation = frozenset(
        (i, j) for i, cond in enumerate(pattern.consistency) for j in cond.pos
    )
    hyperedges = frozenset(frozenset(z.pos) for z in pattern.inconsistency)
    structure = WitnessStructure(witnesses, parameters, relation, hyperedges, resolved)
    report = check_axioms(structure)
    if not report.ok:
        raise AxiomViolation(f"built structure violates its axioms: {report.violations}")
    exhibits = check_exhibits(witness_trace_family(structure), pattern)
    if not exhibits.ok:
        raise AxiomViolation(f"built structure's trace family misses its pattern: {exhibits}")
    return structure


# ---------------------------------------------------------------------------
# Embeddings and free amalgamation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Embedding:
    """Index maps (position = source index, value = target index), one per sort."""

    witness_map: tuple[int, ...]
    parameter_map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "witness_map", tuple(int(v) for v in self.witness_map))
        object.__setattr__(self, "parameter_map", tuple(int(v) for v in self.parameter_map))


def embedding_problems(a: WitnessStructure, b: WitnessStructure, e: Embedding) -> list[str]:
    """Why e: a -> b is not an embedding; empty means it is one.

    Embeddings are injective, sort-preserving, and relation preserving and
    reflecting (the image carries exactly the induced structure).
    """
    problems = []
    if a.flavor != b.flavor:
        problems.append(f"flavor mismatch: {a.flavor} vs {b.flavor}")
    if len(e.witness_map) != len(a.witness_points):
        problems.append("witness map length differs from source witness sort")
    if len(e.parameter_map) != len(a.parameter_points):
        problems.append("parameter map length differs from source parameter sort")
    if problems:
        return problems
    for name, mapping, limit in (
        ("witness", e.witness_map, len(b.witness_points)),
        ("parameter", e.parameter_map, len(b.parameter_points)),
    ):
        if any(not 0 <= v < limit for v in mapping):
            problems.append(f"{name} map leaves the target sort")
        if len(set(mapping)) != len(mapping):
            problems.append(f"{name} map is not injective")
    if problems:
        return problems
    for w in range(len(a.witness_points)):
        for p in range(len(a.parameter_points)):
            if ((w, p) in a.r) != ((e.witness_map[w], e.parameter_map[p]) in b.r):
                problems.append(f"relation not preserved/reflected at ({w},{p})")
    param_image = {v: i for i, v in enumerate(e.parameter_map)}
    for edge in a.hyperedges:
        if frozenset(e.parameter_map[p] for p in edge) not in b.hyperedges:
            problems.append(f"hyperedge {sorted(edge)} not preserved")
    for edge in b.hyperedges:
        if all(v in param_image for v in edge):
            if frozenset(param_image[v] for v in edge) not in a.hyperedges:
                problems.append(f"hyperedge {sorted(edge)} not reflected")
    return problems


@dataclass(frozen=True)
class FreeAmalgam:
    structure: WitnessStructure
    embed0: Embedding  # B0 into the amalgam
    embed1: Embedding  # B1 into the amalgam


def _uniquify(label: str, taken: set[str]) -> str:
    candidate = label
    suffix = 1
    while candidate in taken:
        candidate = f"{label}#{suffix}"
        suffix += 1
    taken.add(candidate)
    return candidate


def free_amalgam(
    a: WitnessStructure,
    b0: WitnessStructure,
    b1: WitnessStructure,
    e0: Embedding,
    e1: Embedding,
) -> FreeAmalgam:
    """Glue b0 and b1 along a, adding no relations across the two sides.

    The universe is b0 plus the b1-points outside the image of a; relations
    are exactly the images of the two sides' relations.  Every hyperedge of
    the result lives inside one side, so the universal axiom survives: a
    witness from the other side is related to the edge's parameters only where
    they are shared, i.e. inside a, where the edge is reflected anyway.
    """
    for name, b, e in (("e0", b0, e0), ("e1", b1, e1)):
        problems = embedding_problems(a, b, e)
        if problems:
            raise NotAnEmbedding(f"{name}: " + "; ".join(problems))

    shared_w = {e1.witness_map[i]: e0.witness_map[i] for i in range(len(a.witness_points))}
    shared_p = {e1.parameter_map[i]: e0.parameter_map[i] for i in range(len(a.parameter_points))}

    taken = set(b0.witness_points) | set(b0.parameter_points)
    witness_labels = list(b0.witness_points)
    parameter_labels = list(b0.parameter_points)

    w1map = []
    for idx, label in enumerate(b1.witness_points):
        if idx in shared_w:
            w1map.append(shared_w[idx])
        else:
            w1map.append(len(witness_labels))
            witness_labels.append(_uniquify(label, taken))
    p1map = []
    for idx, label in enumerate(b1.parameter_points):
        if idx in shared_p:
            p1map.append(shared_p[idx])
        else:
            p1map.append(len(parameter_labels))
            parameter_labels.append(_uniquify(label, taken))

    relation = set(b0.r) | {(w1map[w], p1map[p]) for w, p in b1.r}
    hyperedges = set(b0.hyperedges) | {
        frozenset(p1map[p] for p in edge) for edge in b1.hyperedges
    }
    amalgam = WitnessStructure(
        tuple(witness_labels),
        tuple(parameter_labels),
        frozenset(relation),
        frozenset(hyperedges),
        a.flavor,
    )
    embed0 = Embedding(
        tuple(range(len(b0.witness_points))), tuple(range(len(b0.parameter_points)))
    )
    embed1 = Embedding(tuple(w1map), tuple(p1map))

    report = check_axioms(amalgam)
    if not report.ok:
        raise AxiomViolation(f"amalgam violates the axioms: {report.violations}")
    for name, b, e in (("B0", b0, embed0), ("B1", b1, embed1)):
        problems = embedding_problems(b, amalgam, e)
        if problems:
            raise AxiomViolation(f"{name} does not embed into the amalgam: {problems}")
    for i in range(len(a.witness_points)):
        if embed0.witness_map[e0.witness_map[i]] != embed1.witness_map[e1.witness_map[i]]:
            raise AxiomViolation("amalgam square does not commute on the witness sort")
    for i in range(len(a.parameter_points)):
        if embed0.parameter_map[e0.parameter_map[i]] != embed1.parameter_map[e1.parameter_map[i]]:
            raise AxiomViolation("amalgam square does not commute on the parameter sort")
    return FreeAmalgam(amalgam, embed0, embed1)


# ---------------------------------------------------------------------------
# Triangle-free doubling
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TriangleFreeDoubling:
    graph: Hypergraph
    pairs: tuple[tuple[int, int], ...]
    clique_witnesses: tuple[tuple[int, frozenset[int]], ...]
    family: SetFamily


def triangle_free_double(g: Hypergraph, bound: int | None = None) -> TriangleFreeDoubling:
    """Realize a graph inside a triangle-free one.

    Each vertex v becomes a non-adjacent pair (b_v, c_v); each non-edge {v,w}
    contributes the cross edges {b_v,c_w} and {b_w,c_v}; each nonempty clique
    S gets a fresh witness vertex adjacent to exactly {b_v, c_v : v in S}
    (an independent set, because clique members' cross edges were not added).
    The result is scanned for triangles and the derived family
    B_v = {x : x adjacent to both b_v and c_v} must realize g.
    """
    if g.arity != 2:
        raise ArityMismatch("doubling is defined for graphs (arity 2)")
    limit = enumeration_bound(DOUBLING_VERTICES) if bound is None else bound
    if g.vertex_count > limit:
        raise BoundExceeded(f"{g.vertex_count} vertices exceed doubling bound {limit}")
    n = g.vertex_count
    table = _clique_table(g)
    clique_masks = [mask for mask in range(1, 1 << n) if table[mask]]
    total = 2 * n + len(clique_masks)

    edges = set()
    for v in range(n):
        for w in range(n):
            if v != w and frozenset((v, w)) not in g.edges:
                edges.add(frozenset((v, n + w)))
    for t, mask in enumerate(clique_masks):
        witness = 2 * n + t
        for v in _bits(mask):
            edges.add(frozenset((witness, v)))
            edges.add(frozenset((witness, n + v)))
    doubled = Hypergraph(2, total, frozenset(edges))

    adjacency = [0] * total
    for edge in doubled.edges:
        u, v = sorted(edge)
        adjacency[u] |= 1 << v
        adjacency[v] |= 1 << u
    for edge in doubled.edges:
        u, v = sorted(edge)
        if adjacency[u] & adjacency[v]:
            common = (adjacency[u] & adjacency[v]).bit_length() - 1
            raise TriangleFound(f"triangle on {u}, {v}, {common}")

    sets = tuple(
        frozenset(
            x for x in range(total) if adjacency[x] >> v & 1 and adjacency[x] >> (n + v) & 1
        )
        for v in range(n)
    )
    family = SetFamily(total or 1, sets)
    if not realize_check(family, g):
        raise VerificationFailure("doubling's derived family fails to realize the graph")
    return TriangleFreeDoubling(
        doubled,
        tuple((v, n + v) for v in range(n)),
        tuple((2 * n + t, frozenset(_bits(mask))) for t, mask in enumerate(clique_masks)),
        family,
    )
