from fractions import Fraction


class InvalidAtError(ValueError):
    """
    A deformation family fails at a sampled parameter value.

    Fields:
        tau (Fraction): the first failing parameter value.
        reason (str): what went wrong there.
    """
    kind = "InvalidAt"

    def __init__(self, tau: Fraction, reason: str):
        self.tau = tau
        self.reason = reason
        super().__init__(f"{self.kind}(tau={tau}): {reason}")
