"""Switch between the validated formulas and the text exactly as printed."""

import enum

__all__ = ["Fidelity"]


class Fidelity(str, enum.Enum):
    """``CORRECTED`` uses the three fixed terms; ``AS_PRINTED`` reproduces the
    printed Psi_3 third term, the ``-sqrt(n)`` Airy-edge exponent and the
    ``-xi sqrt(2n)`` sign in Phi_4."""

    CORRECTED = "corrected"
    AS_PRINTED = "as-printed"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        v = str(value).strip().lower().replace("_", "-")
        return cls(v)
