class InvalidHexError(ValueError):
    def __init__(self, value: str):
        super().__init__(f"'{value}' is not a six digit hex colour")
