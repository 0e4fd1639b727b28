class DivisionByZeroError(ZeroDivisionError):
    def __init__(self, numerator):
        super().__init__(f"cannot divide {numerator} by the zero element of its field")
