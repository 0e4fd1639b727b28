class TooManyFacetsError(ValueError):
    def __init__(self, facets: int, limit: int, task: str):
        self.facets = facets
        self.limit = limit
        super().__init__(f"{task} is limited to {limit} facets, got {facets}")
