"""Three-valued verdicts with certificates.

Every semi-decidable question in the engine answers holds / fails /
undetermined. A holds or fails always carries a re-checkable certificate;
an undetermined records the bound at which the search stopped.
Undetermined never participates in a positive conclusion.
"""


class Verdict:
    __slots__ = ("status", "bound", "value", "certificate")

    HOLDS = "holds"
    FAILS = "fails"
    UNDETERMINED = "undetermined"

    def __init__(self, status, bound=None, value=None, certificate=None):
        if status not in (self.HOLDS, self.FAILS, self.UNDETERMINED):
            raise ValueError(f"bad verdict status {status!r}")
        self.status = status
        self.bound = bound
        self.value = value
        self.certificate = certificate or {}

    @property
    def holds(self):
        return self.status == self.HOLDS

    @property
    def fails(self):
        return self.status == self.FAILS

    @property
    def undetermined(self):
        return self.status == self.UNDETERMINED

    def __repr__(self):
        bits = [self.status]
        if self.value is not None:
            bits.append(f"value={self.value}")
        if self.bound is not None:
            bits.append(f"bound={self.bound}")
        return f"Verdict({', '.join(bits)})"


def holds(value=None, bound=None, certificate=None):
    return Verdict(Verdict.HOLDS, bound=bound, value=value, certificate=certificate)


def fails(value=None, bound=None, certificate=None):
    return Verdict(Verdict.FAILS, bound=bound, value=value, certificate=certificate)


def undetermined(bound=None, certificate=None):
    return Verdict(Verdict.UNDETERMINED, bound=bound, certificate=certificate)
