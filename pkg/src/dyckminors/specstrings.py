"""Family spec strings such as ``dyck:h=1,c=1,k=3`` or ``msg:k=3,h={2},c={3}``."""

import re
from dataclasses import dataclass

from .grids import (
    DyckGridSpec, DyckWallSpec, MixedSurfaceGridSpec, cylindrical_grid, dyck_grid, dyck_wall,
    elementary_wall, mixed_surface_grid,
)


class SpecParseError(ValueError):
    pass


FAMILIES = {
    "dyck": ("h", "c", "k"),
    "msg": ("k", "h", "c"),
    "wall": ("k",),
    "dyckwall": ("h", "c", "t"),
    "cyl": ("m", "n"),
}

_ITEM = re.compile(r"([a-z]+)=(\{[0-9,\s]*\}|-?[0-9]+)")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple

    def get(self, key):
        return dict(self.params)[key]

    def format(self):
        parts = []
        for key in FAMILIES[self.family]:
            val = self.get(key)
            if isinstance(val, frozenset):
                parts.append("%s={%s}" % (key, ",".join(str(x) for x in sorted(val))))
            else:
                parts.append("%s=%d" % (key, val))
        return "%s:%s" % (self.family, ",".join(parts))

    def __str__(self):
        return self.format()

    def object(self):
        """The grid/wall spec object (or plain parameters for cylinders)."""
        f = self.family
        if f == "dyck":
            return DyckGridSpec(self.get("h"), self.get("c"), self.get("k"))
        if f == "msg":
            return MixedSurfaceGridSpec(self.get("k"), self.get("h"), self.get("c"))
        if f == "dyckwall":
            return DyckWallSpec(self.get("h"), self.get("c"), self.get("t"))
        return dict(self.params)

    def build(self):
        f = self.family
        if f == "dyck":
            return dyck_grid(self.object())
        if f == "msg":
            return mixed_surface_grid(self.object())
        if f == "wall":
            return elementary_wall(self.get("k")).graph
        if f == "dyckwall":
            return dyck_wall(self.object())
        return cylindrical_grid(self.get("m"), self.get("n"))


def parse_spec(text):
    text = text.strip()
    if ":" not in text:
        raise SpecParseError("missing family prefix in %r" % text)
    family, rest = text.split(":", 1)
    if family not in FAMILIES:
        raise SpecParseError("unknown family %r" % family)
    params = {}
    pos = 0
    while pos < len(rest):
        m = _ITEM.match(rest, pos)
        if not m:
            raise SpecParseError("cannot parse %r at offset %d" % (rest, pos))
        key, val = m.group(1), m.group(2)
        if key in params:
            raise SpecParseError("repeated key %r" % key)
        if val.startswith("{"):
            inner = val[1:-1].strip()
            try:
                params[key] = frozenset(int(x) for x in inner.split(",") if x.strip())
            except ValueError:
                raise SpecParseError("bad set %r" % val)
        else:
            params[key] = int(val)
        pos = m.end()
        if pos < len(rest):
            if rest[pos] != ",":
                raise SpecParseError("expected ',' in %r" % rest)
            pos += 1
    want = FAMILIES[family]
    if set(params) != set(want):
        raise SpecParseError("%s needs keys %s" % (family, ",".join(want)))
    for key in want:
        if (family == "msg" and key in ("h", "c")) != isinstance(params[key], frozenset):
            raise SpecParseError("key %r has the wrong type" % key)
    return FamilySpec(family, tuple((key, params[key]) for key in want))


def mixed_to_string(spec):
    return FamilySpec("msg", (("k", spec.k), ("h", frozenset(spec.hdl)),
                              ("c", frozenset(spec.crscp)))).format()


def dyck_to_string(spec):
    return FamilySpec("dyck", (("h", spec.h), ("c", spec.c), ("k", spec.k))).format()


def as_mixed(fs):
    """Mixed surface grid spec from a dyck: or msg: spec string."""
    if fs.family == "msg":
        return fs.object()
    if fs.family == "dyck":
        return fs.object().to_mixed()
    raise SpecParseError("expected a dyck: or msg: spec, got %s" % fs.family)
