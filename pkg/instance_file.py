"""Read and write instances as versioned JSON documents.

Documents look like::

    {"format": "vrpstw/1",
     "merchants": [{"id": "m1", "x": 0.0, "y": 0.0}],
     "orders": [{"id": "o1", "merchant_id": "m1", "x": 3.0, "y": 4.0,
                 "quantity": 2, "a": 5.0, "b": 15.0, "c": 25.0,
                 "placed_at": 695}],
     "vehicle": {"Q": 15, "L": 30, "r": 10, "o": 1, "q": 1,
                 "speed": 1, "fleet_size": 5},
     "costs": {"c_L": 20, "early_coeff": 0.5, "late_coeff": 1.5}}

Times are minutes: placed_at from midnight, windows from dispatch.
"""
from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Any

import exceptions
from entity import (
    CostParams,
    Location,
    Merchant,
    Order,
    TimeWindow,
    VehicleSpec,
)
from instance import Instance, validate_instance

FORMAT_VERSION = "vrpstw/1"

_MERCHANT_FIELDS = ({"id", "x", "y"}, set())
_ORDER_FIELDS = (
    {"id", "merchant_id", "x", "y", "quantity", "a", "b", "c"},
    {"placed_at"},
)
_VEHICLE_FIELDS = (
    {"Q", "L", "r", "o", "q", "fleet_size"},
    {"speed", "service_time"},
)
_COST_FIELDS = ({"c_L"}, {"early_coeff", "late_coeff"})
_DOCUMENT_FIELDS = (
    {"format", "merchants", "orders", "vehicle", "costs"}, set(),
)


def _object(
    value: Any,  # noqa: ANN401
    where: str,
    fields: tuple[set[str], set[str]],
) -> dict[str, Any]:
    """Check that value is an object with exactly the allowed keys."""
    if not isinstance(value, dict):
        msg = f"{where}: expected an object"
        raise exceptions.InstanceFormatError(msg)
    required, optional = fields
    unknown = sorted(set(value) - required - optional)
    if unknown:
        msg = f"{where}: unknown field(s) {', '.join(unknown)}"
        raise exceptions.InstanceFormatError(msg)
    missing = sorted(required - set(value))
    if missing:
        msg = f"{where}: missing field(s) {', '.join(missing)}"
        raise exceptions.InstanceFormatError(msg)
    return value


def _number(value: Any, where: str) -> float:  # noqa: ANN401
    """Return value as a float, rejecting anything that is not a number."""
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        msg = f"{where}: expected a number, got {value!r}"
        raise exceptions.InstanceFormatError(msg)
    return float(value)


def _integer(value: Any, where: str) -> int:  # noqa: ANN401
    """Return value as an int, rejecting fractions and non-numbers."""
    number = _number(value, where)
    if not number.is_integer():
        msg = f"{where}: expected an integer, got {value!r}"
        raise exceptions.InstanceFormatError(msg)
    return int(number)


def _text(value: Any, where: str) -> str:  # noqa: ANN401
    """Return value if it is a string."""
    if not isinstance(value, str):
        msg = f"{where}: expected a string, got {value!r}"
        raise exceptions.InstanceFormatError(msg)
    return value


def _list(value: Any, where: str) -> list[Any]:  # noqa: ANN401
    if not isinstance(value, list):
        msg = f"{where}: expected a list"
        raise exceptions.InstanceFormatError(msg)
    return value


def _order_from(data: dict[str, Any], where: str) -> Order:
    """Build an order from its document fields."""
    placed_at = data.get("placed_at")
    return Order(
        id=_text(data["id"], f"{where}.id"),
        merchant_id=_text(data["merchant_id"], f"{where}.merchant_id"),
        customer_location=Location(
            _number(data["x"], f"{where}.x"), _number(data["y"], f"{where}.y"),
        ),
        quantity=_integer(data["quantity"], f"{where}.quantity"),
        window=TimeWindow(
            a=_number(data["a"], f"{where}.a"),
            b=_number(data["b"], f"{where}.b"),
            c=_number(data["c"], f"{where}.c"),
        ),
        placed_at=(None if placed_at is None
                   else _number(placed_at, f"{where}.placed_at")),
    )


def instance_from_document(
    document: Any, name: str = "instance",  # noqa: ANN401
) -> Instance:
    """Build an Instance from a parsed document, checking its structure.

    Field values are not validated here; see validate_instance.
    """
    doc = _object(document, "document", _DOCUMENT_FIELDS)
    if doc["format"] != FORMAT_VERSION:
        msg = (f"document: unknown format {doc['format']!r}, "
               f"expected {FORMAT_VERSION!r}")
        raise exceptions.InstanceFormatError(msg)

    merchants = []
    for i, item in enumerate(_list(doc["merchants"], "merchants")):
        where = f"merchants[{i}]"
        data = _object(item, where, _MERCHANT_FIELDS)
        merchants.append(Merchant(
            id=_text(data["id"], f"{where}.id"),
            location=Location(_number(data["x"], f"{where}.x"),
                              _number(data["y"], f"{where}.y")),
        ))

    orders = [
        _order_from(_object(item, f"orders[{i}]", _ORDER_FIELDS),
                    f"orders[{i}]")
        for i, item in enumerate(_list(doc["orders"], "orders"))
    ]

    vehicle = _object(doc["vehicle"], "vehicle", _VEHICLE_FIELDS)
    costs = _object(doc["costs"], "costs", _COST_FIELDS)
    return Instance(
        merchants=tuple(merchants),
        orders=tuple(orders),
        vehicle=VehicleSpec(
            capacity_Q=_number(vehicle["Q"], "vehicle.Q"),
            endurance_L=_number(vehicle["L"], "vehicle.L"),
            fixed_cost_r=_number(vehicle["r"], "vehicle.r"),
            unit_distance_cost_o=_number(vehicle["o"], "vehicle.o"),
            unit_weight_q=_number(vehicle["q"], "vehicle.q"),
            speed=_number(vehicle.get("speed", 1.0), "vehicle.speed"),
            service_time=_number(
                vehicle.get("service_time", 0.0), "vehicle.service_time"),
        ),
        costs=CostParams(
            distance_penalty_cL=_number(costs["c_L"], "costs.c_L"),
            early_coeff=_number(
                costs.get("early_coeff", 0.5), "costs.early_coeff"),
            late_coeff=_number(
                costs.get("late_coeff", 1.5), "costs.late_coeff"),
        ),
        fleet_size_v=_integer(vehicle["fleet_size"], "vehicle.fleet_size"),
        name=name,
    )


def instance_to_document(instance: Instance) -> dict[str, Any]:
    """Return the JSON document for an instance."""
    vehicle = instance.vehicle
    return {
        "format": FORMAT_VERSION,
        "merchants": [
            {"id": m.id, "x": m.location.x, "y": m.location.y}
            for m in instance.merchants
        ],
        "orders": [
            {
                "id": o.id,
                "merchant_id": o.merchant_id,
                "x": o.customer_location.x,
                "y": o.customer_location.y,
                "quantity": o.quantity,
                "a": o.window.a,
                "b": o.window.b,
                "c": o.window.c,
                "placed_at": o.placed_at,
            }
            for o in instance.orders
        ],
        "vehicle": {
            "Q": vehicle.capacity_Q,
            "L": vehicle.endurance_L,
            "r": vehicle.fixed_cost_r,
            "o": vehicle.unit_distance_cost_o,
            "q": vehicle.unit_weight_q,
            "speed": vehicle.speed,
            "service_time": vehicle.service_time,
            "fleet_size": instance.fleet_size_v,
        },
        "costs": {
            "c_L": instance.costs.distance_penalty_cL,
            "early_coeff": instance.costs.early_coeff,
            "late_coeff": instance.costs.late_coeff,
        },
    }


def dumps_instance(instance: Instance) -> str:
    """Serialize an instance to its JSON text."""
    return json.dumps(instance_to_document(instance), indent=2) + "\n"


def save_instance(instance: Instance, filename: str | Path) -> None:
    """Save an instance as a JSON document."""
    Path(filename).write_text(dumps_instance(instance), encoding="utf-8")


def loads_instance(text: str, name: str = "instance") -> Instance:
    """Parse and validate an instance from JSON text."""
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        msg = (f"{name}: parse error at line {exc.lineno} column {exc.colno}"
               f" (char {exc.pos}): {exc.msg}")
        raise exceptions.InstanceFormatError(msg) from exc
    instance = instance_from_document(document, name)
    violations = validate_instance(instance)
    if violations:
        raise exceptions.InvalidInstance(violations)
    return instance


def load_instance(filename: str | Path) -> Instance:
    """Load and validate an instance; its name is the file stem."""
    path = Path(filename)
    return loads_instance(path.read_text(encoding="utf-8"), path.stem)


def load_orders_csv(filename: str | Path) -> list[Order]:
    """Import orders from a CSV file with one order per row.

    Columns: id, merchant_id, x, y, quantity, a, b, c and optionally
    placed_at (an empty cell means unknown).
    """
    required, optional = _ORDER_FIELDS
    orders = []
    with Path(filename).open(newline="", encoding="utf-8") as f:
        reader = csv.DictReader(f)
        columns = set(reader.fieldnames or ())
        _object(dict.fromkeys(columns), f"{filename} header",
                (required, optional))
        for line, row in enumerate(reader, start=2):
            where = f"{filename}:{line}"
            data: dict[str, Any] = {"id": row["id"],
                                    "merchant_id": row["merchant_id"]}
            for key in columns - {"id", "merchant_id"}:
                cell = (row[key] or "").strip()
                if key == "placed_at" and not cell:
                    continue
                try:
                    data[key] = float(cell)
                except ValueError as exc:
                    msg = f"{where}: {key} is not a number: {cell!r}"
                    raise exceptions.InstanceFormatError(msg) from exc
            orders.append(_order_from(data, where))
    return orders
