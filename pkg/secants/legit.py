# -*- coding: utf-8 -*-

"""
legit
----------------------------------

Legitimate colorings of linear hypergraphs: colorings under which no two edges carry the
same number of vertices of each color.

An n-uniform linear hypergraph with n edges is colored with two colors in two passes over
the edges in their given order F_1, ..., F_n. The first pass colors the still uncolored
vertices of F_i blue for odd i and red for even i. The second pass recolors private
vertices (vertices of F_i in no other edge) until F_i holds exactly

    n - floor(i/2) blue vertices for odd i,    i/2 blue vertices for even i.

Odd targets all exceed n/2 and even targets never do, so the targets are pairwise distinct.
"""

from __future__ import absolute_import, unicode_literals, print_function

import io
import itertools
import json
import logging
from dataclasses import dataclass

import numpy as np

from .errors import ColoringError, HypergraphError, UncoloredVertexError

logger = logging.getLogger(__name__)

BLUE = 'blue'
RED = 'red'
PALETTE = (BLUE, RED)

GENERATOR_MODES = ('pairwise', 'sunflower', 'mixed')

MAX_CORE = 5


class LinearHypergraph(object):
    """
    n edges of n vertices each, any two sharing at most one vertex. Vertices are 0..num_vertices-1.
    """

    def __init__(self, n, edges, num_vertices=None):
        self.n = int(n)
        self.edges = tuple(tuple(sorted(int(v) for v in edge)) for edge in edges)
        if num_vertices is None:
            num_vertices = 1 + max(itertools.chain.from_iterable(self.edges)) if self.edges else 0
        self.num_vertices = int(num_vertices)
        self.validate()
        self._edges_of = None

    def __repr__(self):
        return 'LinearHypergraph(n=%d, num_vertices=%d)' % (self.n, self.num_vertices)

    def __eq__(self, other):
        return isinstance(other, LinearHypergraph) and \
            (self.n, self.num_vertices, self.edges) == (other.n, other.num_vertices, other.edges)

    def __ne__(self, other):
        return not self.__eq__(other)

    def validate(self):
        if self.n < 1:
            raise HypergraphError('n must be at least 1')
        if len(self.edges) != self.n:
            raise HypergraphError('expected exactly %d edges, got %d' % (self.n, len(self.edges)))
        for i, edge in enumerate(self.edges, 1):
            if len(set(edge)) != len(edge):
                raise HypergraphError('edge %d repeats a vertex' % i)
            if len(edge) != self.n:
                raise HypergraphError('edge %d has %d vertices, expected exactly %d' % (i, len(edge), self.n))
            if edge[0] < 0 or edge[-1] >= self.num_vertices:
                raise HypergraphError('edge %d names a vertex outside 0..%d' % (i, self.num_vertices - 1))
        sets = [frozenset(edge) for edge in self.edges]
        for i, j in itertools.combinations(range(self.n), 2):
            if len(sets[i] & sets[j]) > 1:
                raise HypergraphError('edges %d and %d share more than one vertex' % (i + 1, j + 1))

    @property
    def edges_of(self):
        """
        vertex -> 1-based indices of the edges containing it.
        """
        if self._edges_of is None:
            edges_of = [[] for _ in range(self.num_vertices)]
            for i, edge in enumerate(self.edges, 1):
                for v in edge:
                    edges_of[v].append(i)
            self._edges_of = tuple(tuple(indices) for indices in edges_of)
        return self._edges_of

    def edge(self, i):
        return self.edges[i - 1]

    def private_vertices(self, i):
        return [v for v in self.edge(i) if len(self.edges_of[v]) == 1]

    def neighbors(self, i):
        """
        j -> the vertex F_i shares with F_j, for every other edge F_j meeting F_i.
        """
        return {j: v for v in self.edge(i) for j in self.edges_of[v] if j != i}

    def intersection(self, i, j):
        return self.neighbors(i).get(j)

    def captured(self, i, j):
        """
        For j < i: F_i and F_j meet in a vertex that already lies in some F_k with k < j.
        """
        v = self.intersection(i, j)
        return v is not None and self.edges_of[v][0] < j

    def as_dict(self):
        return {'n': self.n, 'num_vertices': self.num_vertices, 'edges': [list(edge) for edge in self.edges]}


def _attach(edges, members, vertex, used, n):
    """
    Put `vertex` into every edge in `members` if that keeps the hypergraph linear and uniform.
    """
    pairs = list(itertools.combinations(sorted(members), 2))
    if any(pair in used for pair in pairs) or any(len(edges[i]) >= n for i in members):
        return False
    for i in members:
        edges[i].append(vertex)
    used.update(pairs)
    return True


def generate_linear_hypergraph(n, seed, mode='pairwise', intersection_probability=0.5):
    """
    A random n-uniform linear hypergraph with n edges.

    pairwise: each pair of edges meets, with `intersection_probability`, in a fresh vertex of
    its own. sunflower: first adds vertices shared by 3 to min(n, 5) edges, then pairs.
    mixed: draws its own number of such cores and its own pair probability. Every remaining
    slot gets a fresh private vertex. Pairs that would break linearity are skipped.
    """
    if n < 1:
        raise HypergraphError('n must be at least 1')
    if mode not in GENERATOR_MODES:
        raise HypergraphError('unknown generator mode %r (expected one of %s)' % (mode, ', '.join(GENERATOR_MODES)))
    rng = np.random.default_rng(seed)
    edges = [[] for _ in range(n)]
    used = set()
    next_vertex = 0

    cores = 0
    if n >= 3 and mode == 'sunflower':
        cores = n // 2
    elif n >= 3 and mode == 'mixed':
        cores = int(rng.integers(0, n // 2 + 1))
    if mode == 'mixed':
        intersection_probability = float(rng.random())

    for _ in range(cores):
        size = int(rng.integers(3, min(n, MAX_CORE) + 1))
        members = [int(i) for i in rng.choice(n, size=size, replace=False)]
        if _attach(edges, members, next_vertex, used, n):
            next_vertex += 1

    for i, j in itertools.combinations(range(n), 2):
        if rng.random() < intersection_probability and _attach(edges, [i, j], next_vertex, used, n):
            next_vertex += 1

    for edge in edges:
        while len(edge) < n:
            edge.append(next_vertex)
            next_vertex += 1

    hypergraph = LinearHypergraph(n, edges, num_vertices=next_vertex)
    logger.debug('generated %r in %s mode (seed %s, %d shared pairs)', hypergraph, mode, seed, len(used))
    return hypergraph


def permute_edges(hypergraph, seed):
    order = np.random.default_rng(seed).permutation(hypergraph.n)
    return LinearHypergraph(hypergraph.n, [hypergraph.edges[int(i)] for i in order],
                            num_vertices=hypergraph.num_vertices)


def target(n, i):
    return n - i // 2 if i % 2 else i // 2


@dataclass(frozen=True)
class EdgeDiagnostics:
    edge: int
    private: int
    captured: int
    disjoint: int
    phase1_blue: int
    target: int
    recolors: int

    @property
    def feasible(self):
        return self.private >= self.captured + self.disjoint + 1

    def as_dict(self):
        return {'edge': self.edge, 'private': self.private, 'captured': self.captured,
                'disjoint': self.disjoint, 'phase1_blue': self.phase1_blue, 'target': self.target,
                'recolors': self.recolors}


@dataclass(frozen=True)
class LegitColoring:
    colors: tuple
    blue_counts: tuple
    targets: tuple
    diagnostics: tuple

    @property
    def recolors(self):
        return tuple(d.recolors for d in self.diagnostics)

    def as_dict(self):
        return {
            'colors': list(self.colors),
            'blue_counts': list(self.blue_counts),
            'targets': list(self.targets),
            'diagnostics': [d.as_dict() for d in self.diagnostics],
        }


def _blue_count(hypergraph, colors, i):
    return sum(1 for v in hypergraph.edge(i) if colors[v] == BLUE)


def two_phase_coloring(hypergraph):
    """
    Color `hypergraph` so that edge i ends with exactly `target(n, i)` blue vertices.

    Raises ColoringError, naming the edge, if a first-pass bound fails or an edge has too few
    private vertices to reach its target. Neither can happen on a valid input.
    """
    n = hypergraph.n
    colors = [None] * hypergraph.num_vertices

    for i in range(1, n + 1):
        color = BLUE if i % 2 else RED
        for v in hypergraph.edge(i):
            if colors[v] is None:
                colors[v] = color

    phase1 = [_blue_count(hypergraph, colors, i) for i in range(1, n + 1)]
    for i, blue in enumerate(phase1, 1):
        if (i % 2 and blue < target(n, i)) or (not i % 2 and blue > target(n, i)):
            raise ColoringError('first pass left edge %d with %d blue vertices, target %d'
                                % (i, blue, target(n, i)), edge=i, diagnostics={'phase1_blue': blue})

    diagnostics = []
    for i in range(1, n + 1):
        private = hypergraph.private_vertices(i)
        neighbors = hypergraph.neighbors(i)
        captured = sum(1 for j, v in neighbors.items() if j < i and hypergraph.edges_of[v][0] < j)
        disjoint = n - 1 - len(neighbors)
        blue = _blue_count(hypergraph, colors, i)
        goal = target(n, i)
        source, replacement = (BLUE, RED) if blue > goal else (RED, BLUE)
        recolors = abs(blue - goal)
        candidates = sorted(v for v in private if colors[v] == source)
        entry = EdgeDiagnostics(edge=i, private=len(private), captured=captured, disjoint=disjoint,
                                phase1_blue=phase1[i - 1], target=goal, recolors=recolors)
        if recolors > len(candidates) or not entry.feasible:
            raise ColoringError('edge %d needs %d recolors but has %d private %s vertices'
                                % (i, recolors, len(candidates), source), edge=i, diagnostics=entry.as_dict())
        for v in candidates[:recolors]:
            colors[v] = replacement
        diagnostics.append(entry)

    coloring = LegitColoring(
        colors=tuple(colors),
        blue_counts=tuple(_blue_count(hypergraph, colors, i) for i in range(1, n + 1)),
        targets=tuple(target(n, i) for i in range(1, n + 1)),
        diagnostics=tuple(diagnostics),
    )
    logger.debug('colored %r with %d recolors', hypergraph, sum(coloring.recolors))
    return coloring


def _palette(num_colors):
    if num_colors == 2:
        return PALETTE
    return tuple(range(num_colors))


def multiplicity_lists(hypergraph, colors, num_colors=2):
    """
    Per edge, the number of its vertices of each color, in palette order (blue, red for two).
    """
    if isinstance(colors, LegitColoring):
        colors = colors.colors
    colors = list(colors)
    palette = _palette(num_colors)
    if len(colors) < hypergraph.num_vertices:
        raise UncoloredVertexError('vertex %d is uncolored' % len(colors))
    lists = []
    for edge in hypergraph.edges:
        counts = dict.fromkeys(palette, 0)
        for v in edge:
            color = colors[v]
            if color is None:
                raise UncoloredVertexError('vertex %d is uncolored' % v)
            if color not in counts:
                raise UncoloredVertexError('vertex %d has color %r outside the palette' % (v, color))
            counts[color] += 1
        lists.append(tuple(counts[c] for c in palette))
    return lists


def verify_legitimate(hypergraph, coloring, num_colors=2):
    """
    Returns `(legitimate, certificate)`. The certificate lists the multiplicities and, when
    two edges collide, their 1-based indices as `pair`.
    """
    lists = multiplicity_lists(hypergraph, coloring, num_colors)
    seen = {}
    for i, multiplicities in enumerate(lists, 1):
        if multiplicities in seen:
            return False, {'pair': [seen[multiplicities], i], 'multiplicities': [list(m) for m in lists]}
        seen[multiplicities] = i
    return True, {'pair': None, 'multiplicities': [list(m) for m in lists]}


def hypergraph_from_dict(payload):
    try:
        return LinearHypergraph(payload['n'], payload['edges'], num_vertices=payload.get('num_vertices'))
    except (KeyError, TypeError) as e:
        raise HypergraphError('malformed hypergraph: %s' % e)


def read_hypergraph(path):
    with io.open(path, 'r', encoding='utf-8') as handle:
        return hypergraph_from_dict(json.load(handle))


def write_hypergraph(path, hypergraph):
    with io.open(path, 'w', encoding='utf-8') as handle:
        handle.write(json.dumps(hypergraph.as_dict(), sort_keys=True) + '\n')


def read_coloring(path):
    with io.open(path, 'r', encoding='utf-8') as handle:
        payload = json.load(handle)
    if 'colors' not in payload:
        raise UncoloredVertexError('coloring file %s has no colors' % path)
    return list(payload['colors'])


def write_coloring(path, coloring):
    colors = coloring.colors if isinstance(coloring, LegitColoring) else coloring
    with io.open(path, 'w', encoding='utf-8') as handle:
        handle.write(json.dumps({'colors': list(colors)}, sort_keys=True) + '\n')
