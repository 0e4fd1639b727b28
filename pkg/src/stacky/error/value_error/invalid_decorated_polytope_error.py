class InvalidDecoratedPolytopeError(ValueError):
    def __init__(self, check: str, face: str, message: str):
        self.check = check
        self.face = face
        super().__init__(f"[{check}] {face}: {message}")
