"""Per-graph verdicts: clique polynomial by every applicable route, root
analysis, the K4-free chordal real-rootedness claim and the Turan check."""

from __future__ import annotations

from dataclasses import dataclass

from .chordal import (
    CliqueDecomposition,
    EliminationOrdering,
    clique_tree,
    closed_form_clique_polynomial,
    decomposition_multiplicity,
    fast_chordal_polynomial,
    maximum_cardinality_search,
)
from .clique import count_cliques
from .graph import Graph, encode_graph6, is_connected
from .poly import IntPolynomial, RootAnalysis, analyze_roots
from .reduce import PreconditionError, require_k4_free_chordal


class ConsistencyError(RuntimeError):
    """Two independent computations disagreed: a bug, never a finding."""


@dataclass(frozen=True)
class TuranRecord:
    discriminant: int
    bound_holds: bool  # 3m <= n^2
    quadratic_bound_holds: bool  # m <= ((n+1)/2)^2 - 1, i.e. discriminant >= 0
    asserted: bool  # False under the chordal relaxation

    def to_json(self) -> dict:
        return {
            "discriminant": str(self.discriminant),
            "bound_holds": self.bound_holds,
            "quadratic_bound_holds": self.quadratic_bound_holds,
            "asserted": self.asserted,
        }


def turan_check(g: Graph, chordal_relax: bool = False) -> TuranRecord:
    """Discriminant of Q and the K4-free Turan bound 3m <= n^2, in exact integers.

    On connected K4-free chordal input the discriminant is asserted
    non-negative. With ``chordal_relax`` the chordality requirement is
    dropped and the numbers are only reported.
    """
    require_k4_free_chordal(g, chordal=not chordal_relax)
    n, m = g.n, g.m
    disc = (n - 1) ** 2 - 4 * (m - n + 1)
    # m <= ((n+1)/2)^2 - 1  <=>  4m <= (n+1)^2 - 4  <=>  disc >= 0
    quad = 4 * m <= (n + 1) ** 2 - 4
    # ((n+1)/2)^2 - 1 <= n^2/3  <=>  (n-3)^2 >= 0
    chain = 3 * ((n + 1) ** 2 - 4) <= 4 * n * n
    rec = TuranRecord(disc, 3 * m <= n * n, quad, not chordal_relax)
    if quad != (disc >= 0) or not chain:
        raise ConsistencyError(f"Turan inequality chain broke on n={n}, m={m}")
    if rec.asserted and (disc < 0 or not rec.bound_holds):
        raise ConsistencyError(f"K4-free chordal graph with negative discriminant: n={n}, m={m}")
    return rec


@dataclass(frozen=True)
class GraphReport:
    graph_id: str
    graph6: str
    n: int
    m: int
    t: int
    omega: int
    connected: bool
    chordal: bool
    k4_free: bool
    k5_free: bool
    clique_polynomial: IntPolynomial
    root_analysis: RootAnalysis
    decomposition: CliqueDecomposition | None = None
    turan: TuranRecord | None = None
    theorem1_consistent: bool | None = None

    def to_json(self) -> dict:
        out = {
            "graph_id": self.graph_id,
            "graph6": self.graph6,
            "n": str(self.n),
            "m": str(self.m),
            "t": str(self.t),
            "omega": str(self.omega),
            "connected": self.connected,
            "chordal": self.chordal,
            "k4_free": self.k4_free,
            "k5_free": self.k5_free,
            "clique_polynomial": self.clique_polynomial.to_json(),
            "clique_polynomial_text": str(self.clique_polynomial),
            "root_analysis": self.root_analysis.to_json(),
        }
        if self.decomposition is not None:
            d = self.decomposition.to_json()
            out["decomposition"] = {k: [[str(x) for x in row] for row in v] for k, v in d.items()}
        if self.turan is not None:
            out["turan"] = self.turan.to_json()
        if self.theorem1_consistent is not None:
            out["theorem1_consistent"] = self.theorem1_consistent
        return out

    def csv_row(self) -> list[str]:
        return [
            self.graph_id, str(self.n), str(self.m), str(self.omega),
            str(self.chordal).lower(), str(self.k4_free).lower(),
            str(self.root_analysis.is_real_rooted).lower(),
            str(self.root_analysis.multiplicity_at_minus_one),
            "" if self.turan is None else str(self.turan.bound_holds).lower(),
        ]


CSV_HEADER = ["id", "n", "m", "omega", "chordal", "k4_free", "real_rooted", "mult_minus_one", "turan_holds"]


def analyze_graph(g: Graph, graph_id: str = "", chordal_relax: bool = False) -> GraphReport:
    if g.n < 1:
        raise ValueError("analyze_graph needs at least one vertex")
    cv = count_cliques(g)
    poly = IntPolynomial((1,) + cv.counts)
    roots = analyze_roots(poly)
    connected = is_connected(g)
    mcs = maximum_cardinality_search(g)
    chordal = isinstance(mcs, EliminationOrdering)
    k4_free = cv.omega < 4
    k5_free = cv.omega < 5

    decomposition = None
    if chordal:
        fast = fast_chordal_polynomial(g, mcs)
        if fast != poly:
            raise ConsistencyError(f"PEO formula {fast} != enumeration {poly}")
        if connected:
            decomposition = clique_tree(g, mcs)
            bad = decomposition.violations(g)
            if bad:
                raise ConsistencyError(f"clique tree invalid: {bad}")
            closed = closed_form_clique_polynomial(decomposition)
            if closed != poly:
                raise ConsistencyError(f"closed form {closed} != enumeration {poly}")
            predicted = decomposition_multiplicity(decomposition)
            if predicted != roots.multiplicity_at_minus_one:
                raise ConsistencyError(
                    f"multiplicity at -1 is {roots.multiplicity_at_minus_one}, decomposition predicts {predicted}")

    turan = None
    if connected and k4_free and (chordal or chordal_relax):
        try:
            turan = turan_check(g, chordal_relax=chordal_relax and not chordal)
        except PreconditionError:
            turan = None

    theorem1 = None
    if connected and chordal and k4_free:
        theorem1 = roots.is_real_rooted and roots.multiplicity_at_minus_one >= 1

    return GraphReport(
        graph_id=graph_id,
        graph6=encode_graph6(g),
        n=g.n,
        m=g.m,
        t=cv[3],
        omega=cv.omega,
        connected=connected,
        chordal=chordal,
        k4_free=k4_free,
        k5_free=k5_free,
        clique_polynomial=poly,
        root_analysis=roots,
        decomposition=decomposition,
        turan=turan,
        theorem1_consistent=theorem1,
    )
