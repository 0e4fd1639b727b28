from __future__ import annotations
from dataclasses import dataclass

from ..error.value_error.invalid_hex_error import InvalidHexError
from ..error.value_error.out_of_bounds_error import OutOfBoundsError

@dataclass(frozen=True)
class Color:
    r: float
    g: float
    b: float

    @staticmethod
    def from_hex(hex: str) -> Color:
        hex = hex.lstrip("#")
        if len(hex) != 6:
            raise InvalidHexError(hex)
        try:
            return Color(int(hex[0:2], 16), int(hex[2:4], 16), int(hex[4:6], 16))
        except ValueError:
            raise InvalidHexError(hex)

    def to_hex(self) -> str:
        return "#" + "".join(f"{int(round(c)):02x}" for c in (self.r, self.g, self.b))

    def lerp(self, color: Color, t: float) -> Color:
        """
        The color a fraction t of the way towards another color.

        Args:
            color (Color): target color.
            t (float): position in [0, 1].
        """
        if not 0 <= t <= 1:
            raise OutOfBoundsError("t", t, 0, 1)
        return Color(self.r + t * (color.r - self.r),
                     self.g + t * (color.g - self.g),
                     self.b + t * (color.b - self.b))
