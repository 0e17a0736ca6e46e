from .connected_sets import (
    ConnectedSetQuery,
    enum_connected_sets,
    iter_connected_sets,
    count_bound,
)
