"""Human readable colour names for route maps."""
white = (0xFF, 0xFF, 0xFF)

merchant_fill = (0xE0, 0x40, 0x40)
customer_fill = (0x20, 0xA0, 0xFF)
label_text = (0x20, 0x20, 0x20)

# Route strokes, cycled when a solution has more routes than colours.
route_strokes = [
    (0x1F, 0x77, 0xB4),
    (0xFF, 0x7F, 0x0E),
    (0x2C, 0xA0, 0x2C),
    (0xD6, 0x27, 0x28),
    (0x94, 0x67, 0xBD),
    (0x8C, 0x56, 0x4B),
    (0xE3, 0x77, 0xC2),
    (0x7F, 0x7F, 0x7F),
    (0xBC, 0xBD, 0x22),
    (0x17, 0xBE, 0xCF),
]


def to_hex(rgb: tuple[int, int, int]) -> str:
    """Return an RGB triple as an SVG colour string."""
    return "#{:02x}{:02x}{:02x}".format(*rgb)


def route_stroke(index: int) -> str:
    """Return the stroke colour of the index-th route."""
    return to_hex(route_strokes[index % len(route_strokes)])
