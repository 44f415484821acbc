"""Non-strictification: sequence-and-shape objects over an ambient category.

An object pairs a finite sequence of ambient objects with a parenthesization
shape of matching size; its product in the ambient category follows the
shape.  Concatenating sequences and pairing shapes is strictly unital but
only associative up to the transported ambient associator, so the result is
a non-strict monoidal category even over a strict base.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .core import (
    CategoryModel,
    CompositionError,
    MonFunctorData,
    Morphism,
    NatTransData,
)
from .terms import (
    BULLET,
    UNIT,
    Leaf,
    MagmaTerm,
    collapse,
    forget_parens,
    is_shape,
    leaf_count,
    mag,
    parse_term,
    render_term,
    shapes_with_leaves,
)


@dataclass(frozen=True)
class QObject:
    """A sequence of ambient objects shaped by a parenthesization tree."""

    seq: tuple
    shape: MagmaTerm

    def __post_init__(self):
        if not is_shape(self.shape):
            raise ValueError("the shape component must be a bullet term")
        if leaf_count(self.shape) != len(self.seq):
            raise ValueError(
                f"shape with {leaf_count(self.shape)} leaves does not fit {len(self.seq)} entries"
            )

    def __len__(self):
        return len(self.seq)


EMPTY_Q = QObject((), UNIT)


def par_q(model: CategoryModel, o: QObject):
    """Tensor of the entries, parenthesized along the shape."""

    def go(shape: MagmaTerm, offset: int):
        if isinstance(shape, Leaf):
            return o.seq[offset], offset + 1
        value_left, offset = go(shape.left, offset)
        value_right, offset = go(shape.right, offset)
        return model.tensor_obj(value_left, value_right), offset

    if not o.seq:
        return model.unit_obj
    value, _ = go(o.shape, 0)
    return value


def star_q_objects(o: QObject, p: QObject) -> QObject:
    return QObject(o.seq + p.seq, mag(o.shape, p.shape))


def _iota(model: CategoryModel, o: QObject, p: QObject) -> Morphism:
    """Par(o*p) -> Par(o) (x) Par(p); a unitor inverse when a factor is empty."""
    if o.seq and p.seq:
        return model.identity(model.tensor_obj(par_q(model, o), par_q(model, p)))
    if not o.seq and not p.seq:
        return model.lunitor_inv(model.unit_obj)
    if not p.seq:
        return model.runitor_inv(par_q(model, o))
    return model.lunitor_inv(par_q(model, p))


def _iota_inv(model: CategoryModel, o: QObject, p: QObject) -> Morphism:
    if o.seq and p.seq:
        return model.identity(model.tensor_obj(par_q(model, o), par_q(model, p)))
    if not o.seq and not p.seq:
        return model.lunitor(model.unit_obj)
    if not p.seq:
        return model.runitor(par_q(model, o))
    return model.lunitor(par_q(model, p))


def star_q_arrows(model: CategoryModel, f: Morphism, g: Morphism) -> Morphism:
    """Concatenation of shaped arrows.

    For nonempty factors the payload is the plain ambient tensor, which is
    well-typed because parenthesization splits along the top shape pair.
    When a factor is the empty object the concatenation absorbs it, so the
    tensor is conjugated by the matching unitor to stay well-typed.
    """
    dom = star_q_objects(f.dom, g.dom)
    cod = star_q_objects(f.cod, g.cod)
    if f.dom.seq and g.dom.seq and f.cod.seq and g.cod.seq:
        return Morphism(dom, cod, model.tensor_mor(f.payload, g.payload))
    payload = model.compose(
        _iota_inv(model, f.cod, g.cod),
        model.compose(model.tensor_mor(f.payload, g.payload), _iota(model, f.dom, g.dom)),
    )
    return Morphism(dom, cod, payload)


def assoc_q(model: CategoryModel, o: QObject, p: QObject, q: QObject) -> Morphism:
    """Associativity arrow; its endpoints differ as objects for nonempty factors.

    With an empty factor both bracketings are the same object and the
    component reduces to the identity (the ambient component conjugated by
    unitors collapses, by the standard unit coherence lemmas).
    """
    dom = star_q_objects(star_q_objects(o, p), q)
    cod = star_q_objects(o, star_q_objects(p, q))
    if not (o.seq and p.seq and q.seq):
        return Morphism(dom, cod, model.identity(par_q(model, dom)))
    payload = model.associator(par_q(model, o), par_q(model, p), par_q(model, q))
    return Morphism(dom, cod, payload)


def assoc_q_inv(model: CategoryModel, o: QObject, p: QObject, q: QObject) -> Morphism:
    dom = star_q_objects(o, star_q_objects(p, q))
    cod = star_q_objects(star_q_objects(o, p), q)
    if not (o.seq and p.seq and q.seq):
        return Morphism(dom, cod, model.identity(par_q(model, dom)))
    payload = model.associator_inv(par_q(model, o), par_q(model, p), par_q(model, q))
    return Morphism(dom, cod, payload)


def qobjs_over(objects: Sequence, max_leaves: int) -> list[QObject]:
    """Shaped sequences over the given objects, entries assigned cyclically.

    All assignments are enumerated up to two leaves; beyond that each shape
    is filled once, cycling through the object list, which keeps universes
    small but still exercises every shape.
    """
    out = [EMPTY_Q]
    objects = list(objects)
    for n in range(1, max_leaves + 1):
        for shape in shapes_with_leaves(n):
            if n <= 2:
                for combo in product(objects, repeat=n):
                    out.append(QObject(combo, shape))
            else:
                combo = tuple(objects[i % len(objects)] for i in range(n))
                out.append(QObject(combo, shape))
    return out


class NonStrictifiedModel(CategoryModel):
    """Shaped sequences over a base model; never strict for nonempty shapes."""

    is_strict = False

    def __init__(self, base: CategoryModel):
        self.base = base
        self.name = f"{base.name}_q"

    def _check_obj(self, o) -> QObject:
        if not isinstance(o, QObject):
            raise CompositionError(f"{self.name}: objects are shaped sequences, got {o!r}")
        return o

    def par(self, o):
        return par_q(self.base, self._check_obj(o))

    def make_mor(self, dom: QObject, cod: QObject, payload: Morphism) -> Morphism:
        if not (
            self.base.obj_eq(payload.dom, self.par(dom))
            and self.base.obj_eq(payload.cod, self.par(cod))
        ):
            raise CompositionError(f"{self.name}: payload endpoints do not parenthesize")
        return Morphism(dom, cod, payload)

    def embed_arrow(self, f: Morphism) -> Morphism:
        return Morphism(QObject((f.dom,), Leaf(BULLET)), QObject((f.cod,), Leaf(BULLET)), f)

    def hom(self, o, p):
        base_hom = self.base.hom(self.par(o), self.par(p))
        if base_hom is None:
            return None
        return [Morphism(o, p, payload) for payload in base_hom]

    def identity(self, o):
        return Morphism(o, o, self.base.identity(self.par(o)))

    def compose(self, g, f):
        self._check_composable(g, f)
        return Morphism(f.dom, g.cod, self.base.compose(g.payload, f.payload))

    def mor_eq(self, f, g):
        return f.dom == g.dom and f.cod == g.cod and self.base.mor_eq(f.payload, g.payload)

    @property
    def unit_obj(self) -> QObject:
        return EMPTY_Q

    def tensor_obj(self, o, p):
        return star_q_objects(self._check_obj(o), self._check_obj(p))

    def tensor_mor(self, f, g):
        return star_q_arrows(self.base, f, g)

    def associator(self, o, p, q):
        return assoc_q(self.base, o, p, q)

    def associator_inv(self, o, p, q):
        return assoc_q_inv(self.base, o, p, q)

    def lunitor(self, o):
        return self.identity(self._check_obj(o))

    def lunitor_inv(self, o):
        return self.identity(self._check_obj(o))

    def runitor(self, o):
        return self.identity(self._check_obj(o))

    def runitor_inv(self, o):
        return self.identity(self._check_obj(o))

    def render_obj(self, o):
        if not o.seq:
            return "(;1)"
        entries = ",".join(self.base.render_obj(x) for x in o.seq)
        return f"({entries};{render_term(o.shape)})"

    def render_mor(self, f):
        return f"{self.render_obj(f.dom)}=>{self.render_obj(f.cod)}[{self.base.render_mor(f.payload)}]"


_q_models: "weakref.WeakKeyDictionary[CategoryModel, NonStrictifiedModel]" = weakref.WeakKeyDictionary()


def q_model(base: CategoryModel) -> NonStrictifiedModel:
    """The shaped-sequence category of a model (one shared instance per model)."""
    try:
        return _q_models[base]
    except KeyError:
        model = NonStrictifiedModel(base)
        _q_models[base] = model
        return model


# -- the canonical embedding ----------------------------------------------------


def embed_j(x) -> QObject:
    return QObject((x,), Leaf(BULLET))


def embed_j_mor(f: Morphism) -> Morphism:
    return Morphism(embed_j(f.dom), embed_j(f.cod), f)


def delta_q(model: CategoryModel, o: QObject) -> Morphism:
    par = par_q(model, o)
    return Morphism(o, embed_j(par), model.identity(par))


def delta_q_inv(model: CategoryModel, o: QObject) -> Morphism:
    par = par_q(model, o)
    return Morphism(embed_j(par), o, model.identity(par))


def eta_q(model: CategoryModel, x, y) -> Morphism:
    prod = model.tensor_obj(x, y)
    return Morphism(QObject((x, y), Leaf(BULLET) * Leaf(BULLET)), embed_j(prod), model.identity(prod))


def eta_q_inv(model: CategoryModel, x, y) -> Morphism:
    prod = model.tensor_obj(x, y)
    return Morphism(embed_j(prod), QObject((x, y), Leaf(BULLET) * Leaf(BULLET)), model.identity(prod))


def unit_uq(model: CategoryModel) -> Morphism:
    return Morphism(EMPTY_Q, embed_j(model.unit_obj), model.identity(model.unit_obj))


def unit_uq_inv(model: CategoryModel) -> Morphism:
    return Morphism(embed_j(model.unit_obj), EMPTY_Q, model.identity(model.unit_obj))


def embed_j_functor(model: CategoryModel) -> MonFunctorData:
    return MonFunctorData(
        source=model,
        target=q_model(model),
        obj_map=embed_j,
        mor_map=embed_j_mor,
        gamma=lambda x, y: eta_q(model, x, y),
        gamma_inv=lambda x, y: eta_q_inv(model, x, y),
        u=unit_uq(model),
        u_inv=unit_uq_inv(model),
        strength="strong",
        name=f"j[{model.name}]",
    )


# -- universal property -----------------------------------------------------------


def image_fold_q(functor: MonFunctorData, o: QObject):
    """Target product of the entrywise images, parenthesized along the shape."""
    d = functor.target

    def go(shape: MagmaTerm, offset: int):
        if isinstance(shape, Leaf):
            return functor.obj_map(o.seq[offset]), offset + 1
        left, offset = go(shape.left, offset)
        right, offset = go(shape.right, offset)
        return d.tensor_obj(left, right), offset

    if not o.seq:
        return d.unit_obj
    value, _ = go(o.shape, 0)
    return value


def _split_q(o: QObject) -> tuple[QObject, QObject]:
    n = leaf_count(o.shape.left)
    return QObject(o.seq[:n], o.shape.left), QObject(o.seq[n:], o.shape.right)


def beta_q(functor: MonFunctorData, o: QObject) -> Morphism:
    """Comparison arrow for shaped sequences, by induction on the shape."""
    c, d = functor.source, functor.target
    if not o.seq:
        return functor.u
    if len(o.seq) == 1:
        return d.identity(functor.obj_map(o.seq[0]))
    left, right = _split_q(o)
    padded = d.tensor_mor(beta_q(functor, left), beta_q(functor, right))
    step = functor.gamma(par_q(c, left), par_q(c, right))
    return d.compose(step, padded)


def beta_q_inv(functor: MonFunctorData, o: QObject) -> Morphism:
    if not functor.is_strong:
        raise ValueError(f"{functor.name}: beta is invertible only for strong functors")
    c, d = functor.source, functor.target
    if not o.seq:
        return functor.u_inv
    if len(o.seq) == 1:
        return d.identity(functor.obj_map(o.seq[0]))
    left, right = _split_q(o)
    padded = d.tensor_mor(beta_q_inv(functor, left), beta_q_inv(functor, right))
    step = functor.gamma_inv(par_q(c, left), par_q(c, right))
    return d.compose(padded, step)


def _transport_arrow_q(functor: MonFunctorData, f: Morphism) -> Morphism:
    d = functor.target
    lo = beta_q(functor, f.dom)
    hi = beta_q_inv(functor, f.cod)
    return d.compose(hi, d.compose(functor.mor_map(f.payload), lo))


def lift_nonstrict(functor: MonFunctorData, allow_strict_target: bool = False) -> MonFunctorData:
    """The unique strict monoidal extension along the shaped embedding.

    The target is expected to be non-strict; the flag check can be overridden
    since the construction itself never uses non-strictness.
    """
    if not functor.is_strong:
        raise ValueError(f"{functor.name}: only strong functors lift")
    d = functor.target
    if d.is_strict and not allow_strict_target:
        raise ValueError(f"{functor.name}: target {d.name} is strict; pass allow_strict_target to lift anyway")
    source = q_model(functor.source)

    def obj_map(o: QObject):
        return image_fold_q(functor, o)

    return MonFunctorData(
        source=source,
        target=d,
        obj_map=obj_map,
        mor_map=lambda f: _transport_arrow_q(functor, f),
        gamma=lambda o, p: d.identity(d.tensor_obj(obj_map(o), obj_map(p))),
        gamma_inv=lambda o, p: d.identity(d.tensor_obj(obj_map(o), obj_map(p))),
        u=d.identity(d.unit_obj),
        u_inv=d.identity(d.unit_obj),
        strength="strict",
        name=f"{functor.name}^q",
    )


def lift_nat_nonstrict(alpha: NatTransData, allow_strict_target: bool = False) -> NatTransData:
    """Lift of a monoidal transformation: components folded along the shape."""
    d = alpha.dom.target
    f_hat = lift_nonstrict(alpha.dom, allow_strict_target)
    g_hat = lift_nonstrict(alpha.cod, allow_strict_target)

    def component(o: QObject) -> Morphism:
        if not o.seq:
            return d.identity(d.unit_obj)
        if len(o.seq) == 1:
            return alpha.component(o.seq[0])
        left, right = _split_q(o)
        return d.tensor_mor(component(left), component(right))

    return NatTransData(dom=f_hat, cod=g_hat, component=component, name=f"{alpha.name}^q")


# -- the non-strictification 2-functor ------------------------------------------------


def q_functor(functor: MonFunctorData) -> MonFunctorData:
    """Entrywise image with the shape preserved; arrows through beta."""
    if not functor.is_strong:
        raise ValueError(f"{functor.name}: only strong functors non-strictify")
    source = q_model(functor.source)
    target = q_model(functor.target)

    def obj_map(o: QObject) -> QObject:
        return QObject(tuple(functor.obj_map(x) for x in o.seq), o.shape)

    def mor_map(f: Morphism) -> Morphism:
        return Morphism(obj_map(f.dom), obj_map(f.cod), _transport_arrow_q(functor, f))

    def gamma(o, p):
        return target.identity(star_q_objects(obj_map(o), obj_map(p)))

    return MonFunctorData(
        source=source,
        target=target,
        obj_map=obj_map,
        mor_map=mor_map,
        gamma=gamma,
        gamma_inv=gamma,
        u=target.identity(EMPTY_Q),
        u_inv=target.identity(EMPTY_Q),
        strength="strict",
        name=f"{functor.name}_q",
    )


def q_nat(alpha: NatTransData) -> NatTransData:
    """Components tensored along the shape of each object."""
    d = alpha.dom.target
    f_q = q_functor(alpha.dom)
    g_q = q_functor(alpha.cod)

    def payload(o: QObject) -> Morphism:
        if not o.seq:
            return d.identity(d.unit_obj)
        if len(o.seq) == 1:
            return alpha.component(o.seq[0])
        left, right = _split_q(o)
        return d.tensor_mor(payload(left), payload(right))

    def component(o: QObject) -> Morphism:
        return Morphism(f_q.obj_map(o), g_q.obj_map(o), payload(o))

    return NatTransData(dom=f_q, cod=g_q, component=component, name=f"{alpha.name}_q")


# -- realisation for categories with free-monoid objects --------------------------------


def _word_objects_or_raise(model: CategoryModel) -> tuple:
    generators = getattr(model, "generators", None)
    if not generators:
        raise ValueError(f"{model.name}: realisation needs a model with word objects")
    probe = model.tensor_obj((generators[0],), (generators[0],))
    if probe != (generators[0], generators[0]):
        raise ValueError(f"{model.name}: tensor is not word concatenation")
    return tuple(generators)


def seq_q(term: MagmaTerm) -> QObject:
    """Shaped sequence of one-letter words spelled by a term."""
    return QObject(tuple((x,) for x in forget_parens(term)), collapse(term))


class RealisedTermCategory(CategoryModel):
    """Free-magma objects over a word-object model, homs through shaped sequencing."""

    is_strict = False

    def __init__(self, base: CategoryModel):
        self.generators = _word_objects_or_raise(base)
        self.base = base
        self.name = f"{base.name}~terms"

    def _check_obj(self, v) -> MagmaTerm:
        if not isinstance(v, MagmaTerm):
            raise CompositionError(f"{self.name}: objects are magma terms, got {v!r}")
        return v

    def par(self, v):
        return par_q(self.base, seq_q(self._check_obj(v)))

    def hom(self, v, w):
        base_hom = self.base.hom(self.par(v), self.par(w))
        if base_hom is None:
            return None
        return [Morphism(v, w, payload) for payload in base_hom]

    def identity(self, v):
        return Morphism(v, v, self.base.identity(self.par(v)))

    def compose(self, g, f):
        self._check_composable(g, f)
        return Morphism(f.dom, g.cod, self.base.compose(g.payload, f.payload))

    def mor_eq(self, f, g):
        return f.dom == g.dom and f.cod == g.cod and self.base.mor_eq(f.payload, g.payload)

    @property
    def unit_obj(self) -> MagmaTerm:
        return UNIT

    def tensor_obj(self, v, w):
        return mag(self._check_obj(v), self._check_obj(w))

    def tensor_mor(self, f, g):
        lifted = star_q_arrows(
            self.base,
            Morphism(seq_q(f.dom), seq_q(f.cod), f.payload),
            Morphism(seq_q(g.dom), seq_q(g.cod), g.payload),
        )
        return Morphism(mag(f.dom, g.dom), mag(f.cod, g.cod), lifted.payload)

    def associator(self, u, v, w):
        lifted = assoc_q(self.base, seq_q(u), seq_q(v), seq_q(w))
        return Morphism(mag(mag(u, v), w), mag(u, mag(v, w)), lifted.payload)

    def associator_inv(self, u, v, w):
        lifted = assoc_q_inv(self.base, seq_q(u), seq_q(v), seq_q(w))
        return Morphism(mag(u, mag(v, w)), mag(mag(u, v), w), lifted.payload)

    def lunitor(self, v):
        return self.identity(self._check_obj(v))

    def lunitor_inv(self, v):
        return self.identity(self._check_obj(v))

    def runitor(self, v):
        return self.identity(self._check_obj(v))

    def runitor_inv(self, v):
        return self.identity(self._check_obj(v))

    def render_obj(self, v):
        return render_term(v)

    def parse_obj(self, text):
        term = parse_term(text)
        bad = [x for x in forget_parens(term) if x not in self.generators]
        if bad:
            raise CompositionError(f"{self.name}: unknown generators {sorted(set(bad))}")
        return term

    def render_mor(self, f):
        return f"{self.render_obj(f.dom)}=>{self.render_obj(f.cod)}[{self.base.render_mor(f.payload)}]"


def realise_tilde_q(model: CategoryModel) -> RealisedTermCategory:
    return RealisedTermCategory(model)


def seq_term_functor(model: CategoryModel) -> MonFunctorData:
    """Shaped sequencing as a strict monoidal functor from the term realisation."""
    realised = realise_tilde_q(model)
    target = q_model(model)

    def mor_map(f: Morphism) -> Morphism:
        return Morphism(seq_q(f.dom), seq_q(f.cod), f.payload)

    return MonFunctorData(
        source=realised,
        target=target,
        obj_map=seq_q,
        mor_map=mor_map,
        gamma=lambda v, w: target.identity(seq_q(mag(v, w))),
        gamma_inv=lambda v, w: target.identity(seq_q(mag(v, w))),
        u=target.identity(EMPTY_Q),
        u_inv=target.identity(EMPTY_Q),
        strength="strict",
        name=f"SeqQ[{model.name}]",
    )
