"""Device coupling graphs and qubit routing."""

from .routing import Placement, RoutingError, RoutingResult, greedy_placement, route, unmap, validate_mapping
from .topology import (
    Device,
    DeviceFormatError,
    complete_device,
    heavy_hex_device,
    line_device,
    parse_device,
    read_device_file,
    star_device,
    t_device,
    write_device,
)

__all__ = [
    "Device",
    "DeviceFormatError",
    "Placement",
    "RoutingError",
    "RoutingResult",
    "complete_device",
    "greedy_placement",
    "heavy_hex_device",
    "line_device",
    "parse_device",
    "read_device_file",
    "route",
    "star_device",
    "t_device",
    "unmap",
    "validate_mapping",
    "write_device",
]
