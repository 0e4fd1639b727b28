class OutOfBoundsError(ValueError):
    def __init__(self, name, v, min_v, max_v):
        self.value = v
        super().__init__(f"{name} was {v}, but should be between {min_v} and {max_v}")
