"""Python bindings for the susp toolkit (suspensions uv = f over Q[x_1..x_n])."""

import json

from . import _susp
from ._susp import (
    can_be_generated_by,
    certify_prime,
    cokernel,
    divides_u,
    factor,
    factor_susp,
    fitting_ideal,
    groebner,
    hypersurface_smooth,
    is_irreducible,
    is_prime_uvf,
    multiply,
    normal_form,
    run,
    smith_normal_form,
    verify_paper,
)


class SuspError(Exception):
    """Library error; ``code`` is the machine-readable name, e.g. ``"syntax_error"``."""

    def __init__(self, code, message):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.message = message


def _wrap(fn):
    def call(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except _susp._Error as e:
            code, message = e.args
            raise SuspError(code, message) from None

    call.__name__ = fn.__name__
    call.__doc__ = fn.__doc__
    return call


for _name in [
    "can_be_generated_by", "certify_prime", "cokernel", "divides_u", "factor", "factor_susp",
    "fitting_ideal", "groebner", "hypersurface_smooth", "is_irreducible", "is_prime_uvf",
    "multiply", "normal_form", "smith_normal_form",
]:
    globals()[_name] = _wrap(getattr(_susp, _name))


@_wrap
def class_group(ring, f):
    return json.loads(_susp.class_group_json(ring, f))


@_wrap
def suspension_report(ring, f):
    return json.loads(_susp.suspension_report_json(ring, f))


@_wrap
def gm_example_report(rows=None):
    return json.loads(_susp.gm_example_report_json(rows))


__all__ = [
    "SuspError", "can_be_generated_by", "certify_prime", "class_group", "cokernel", "divides_u",
    "factor", "factor_susp", "fitting_ideal", "gm_example_report", "groebner",
    "hypersurface_smooth", "is_irreducible", "is_prime_uvf", "multiply", "normal_form", "run",
    "smith_normal_form", "suspension_report", "verify_paper",
]
