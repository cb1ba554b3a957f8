"""Standard corpus of rings and modules driving the verification suites.

Every ring in the corpus carries a small family of right modules: the
regular module, one cyclic projective eR per diagonal idempotent e, the
direct sums of two distinct such summands, and one quotient of the
regular module. The quotient is the canonically least submodule whose
quotient is non-projective; over semisimple rings no such quotient
exists, so the least minimal nonzero submodule is used instead and the
instance is flagged.

Ring and module descriptions are plain JSON so instances round-trip
through files (the CLI's --spec input uses the same shape).
"""

from itertools import combinations

from .algebra import (
    Algebra,
    from_structure_constants,
    matrix_algebra,
    product,
    triangular_algebra,
)
from .fqlinalg import DEFAULT_BUDGET
from .modules import (
    direct_sum,
    idempotent_module,
    is_projective,
    module_from_spec,
    quotient_module,
    regular_module,
    submodule_lattice,
)

DEFAULT_RING_SPECS = (
    ("M2(F2)", {"kind": "matrix", "n": 2, "p": 2}),
    ("M2(F3)", {"kind": "matrix", "n": 2, "p": 3}),
    ("M3(F2)", {"kind": "matrix", "n": 3, "p": 2}),
    ("T2(F2)", {"kind": "triangular", "n": 2, "p": 2}),
    ("T2(F3)", {"kind": "triangular", "n": 2, "p": 3}),
    ("T3(F2)", {"kind": "triangular", "n": 3, "p": 2}),
    ("F2[x]/(x^2)", {"kind": "structure_constants", "p": 2,
                     "table": [[[1, 0], [0, 1]], [[0, 1], [0, 0]]],
                     "unit": [1, 0]}),
    ("F2xF2", {"kind": "product_of_fields", "p": 2, "copies": 2}),
)


def algebra_from_spec(spec):
    """Build an Algebra from a JSON description.

    Recognized kinds: matrix {n, p}, triangular {n, p}, product_of_fields
    {p, copies}, structure_constants {p, table, unit}. A dict without a
    "kind" key is treated as the raw Algebra JSON form.
    """
    if not isinstance(spec, dict):
        raise ValueError(f"algebra spec must be a dict, got {type(spec)!r}")
    if "kind" not in spec:
        return Algebra.from_json(spec)
    kind = spec["kind"]
    if kind == "matrix":
        return matrix_algebra(int(spec["n"]), int(spec["p"]))
    if kind == "triangular":
        return triangular_algebra(int(spec["n"]), int(spec["p"]))
    if kind == "product_of_fields":
        p, copies = int(spec["p"]), int(spec.get("copies", 2))
        if copies < 2:
            raise ValueError("product_of_fields needs at least 2 copies")
        algebra = matrix_algebra(1, p)
        for _ in range(copies - 1):
            algebra = product(algebra, matrix_algebra(1, p))
        return algebra
    if kind == "structure_constants":
        table = spec["table"]
        return from_structure_constants(int(spec["p"]), len(table),
                                        table, spec["unit"])
    raise ValueError(f"unknown algebra spec kind: {kind!r}")


def diagonal_idempotents(spec, algebra):
    """Coordinate vectors of the diagonal idempotents named by the spec.

    Matrix and triangular kinds contribute the E_ii, a product of fields
    contributes the component units. Other kinds contribute none.
    """
    kind = spec.get("kind")
    vectors = []
    if kind == "matrix":
        n = int(spec["n"])
        for i in range(n):
            e = [0] * algebra.dim
            e[i * n + i] = 1
            vectors.append(e)
    elif kind == "triangular":
        n = int(spec["n"])
        pairs = [(i, j) for i in range(n) for j in range(i, n)]
        for i in range(n):
            e = [0] * algebra.dim
            e[pairs.index((i, i))] = 1
            vectors.append(e)
    elif kind == "product_of_fields":
        copies = int(spec.get("copies", 2))
        for i in range(copies):
            e = [0] * algebra.dim
            e[i] = 1
            vectors.append(e)
    return vectors


class CorpusInstance:
    """One named module over one named ring, with its JSON description."""

    __slots__ = ("name", "ring_name", "algebra", "module", "spec", "note")

    def __init__(self, name, ring_name, algebra, module, spec, note=""):
        self.name = name
        self.ring_name = ring_name
        self.algebra = algebra
        self.module = module
        self.spec = spec
        self.note = note

    def __repr__(self):
        return f"CorpusInstance({self.name!r})"


class CorpusRing:
    """A corpus ring together with its standard module instances."""

    __slots__ = ("name", "spec", "algebra", "instances")

    def __init__(self, name, spec, algebra, instances):
        self.name = name
        self.spec = spec
        self.algebra = algebra
        self.instances = instances

    def __repr__(self):
        return f"CorpusRing({self.name!r}, {len(self.instances)} instances)"


def _nonprojective_quotient(algebra, budget):
    """Least submodule of the regular module with non-projective quotient.

    Returns (quotient module, submodule, note). Over a semisimple ring
    every quotient is projective, so the least minimal nonzero submodule
    is used and the note flags the substitution.
    """
    reg = regular_module(algebra)
    members = submodule_lattice(reg, budget)
    for sub in members:
        if sub.dim == 0 or not sub.is_proper():
            continue
        quot = quotient_module(reg, sub).quotient
        if not is_projective(quot, budget)[0]:
            return quot, sub, ""
    for sub in members:
        if sub.dim == 0:
            continue
        if any(0 < other.dim < sub.dim and sub.space.contains(other.space)
               for other in members):
            continue
        quot = quotient_module(reg, sub).quotient
        return quot, sub, "projective-fallback"
    raise ValueError("ring has no nonzero submodule of the regular module")


def _instance(ring_name, ring_spec, algebra, label, module, note=""):
    spec = {
        "name": f"{ring_name}:{label}",
        "p": algebra.p,
        "algebra": ring_spec,
        "module": module.spec,
    }
    return CorpusInstance(spec["name"], ring_name, algebra, module, spec,
                          note)


def build_ring(name, ring_spec, budget=DEFAULT_BUDGET):
    """Materialize one corpus ring with its standard instances."""
    algebra = algebra_from_spec(ring_spec)
    instances = [
        _instance(name, ring_spec, algebra, "regular",
                  regular_module(algebra)),
    ]
    idempotents = diagonal_idempotents(ring_spec, algebra)
    summands = []
    for i, e in enumerate(idempotents):
        summands.append((f"e{i}R", idempotent_module(algebra, e)))
    for label, module in summands:
        instances.append(_instance(name, ring_spec, algebra, label, module))
    for (la, ma), (lb, mb) in combinations(summands, 2):
        instances.append(_instance(name, ring_spec, algebra, f"{la}+{lb}",
                                   direct_sum([ma, mb])))
    quot, _, note = _nonprojective_quotient(algebra, budget)
    instances.append(_instance(name, ring_spec, algebra, "quotient", quot,
                               note))
    return CorpusRing(name, ring_spec, algebra, instances)


def default_corpus(budget=DEFAULT_BUDGET):
    """The standard eight-ring corpus, in a fixed order."""
    return [build_ring(name, spec, budget)
            for name, spec in DEFAULT_RING_SPECS]


def corpus_instances(corpus):
    """Flatten a corpus into its instance list, preserving order."""
    return [inst for ring in corpus for inst in ring.instances]


def instance_from_spec(obj, name="instance"):
    """Load a single instance from its JSON description.

    The dict needs an "algebra" entry; "module" defaults to the regular
    module; "p", when present, must match the algebra.
    """
    if not isinstance(obj, dict):
        raise ValueError(f"instance spec must be a dict, got {type(obj)!r}")
    if "algebra" not in obj:
        raise ValueError("instance spec is missing the 'algebra' entry")
    algebra = algebra_from_spec(obj["algebra"])
    if "p" in obj and int(obj["p"]) != algebra.p:
        raise ValueError(
            f"spec says p={obj['p']} but the algebra is over F_{algebra.p}")
    if "module" in obj:
        module = module_from_spec(algebra, obj["module"])
    else:
        module = regular_module(algebra)
    label = obj.get("name", name)
    return CorpusInstance(label, obj.get("ring", label), algebra, module,
                          obj)
