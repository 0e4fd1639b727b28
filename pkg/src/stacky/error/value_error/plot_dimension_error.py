class PlotDimensionError(ValueError):
    def __init__(self, n: int):
        super().__init__(f"plots are only drawn for planar polytopes; this one has dimension {n}")
