"""Exception hierarchy.  Everything raised on bad input derives from TagError."""


class TagError(ValueError):
    """Invalid graph, combination or request."""


class TagSyntaxError(TagError):
    """Text could not be parsed."""


class EndpointRangeError(TagError):
    """Edge endpoint or edge position outside the allowed range."""


class IsolatedVertexError(TagError):
    """A vertex has no incident edge; such graphs are not representable."""


class CapacityError(TagError):
    """Request exceeds a configured size limit."""
