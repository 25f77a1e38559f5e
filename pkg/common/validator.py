# common/validator.py
from typing import Iterable, List, Optional


def validate_int(value, min_value: Optional[int] = None, max_value: Optional[int] = None) -> int:
    """
    Validates and converts an input to integer within an optional range.

    Accepts decimal, hex ("0x7FFF") and underscore-grouped ("1_000_000")
    literals as well as scientific shorthands such as "1e6".

    :param value: Input value (usually a CLI token)
    :param min_value: Minimum allowed value
    :param max_value: Maximum allowed value
    :return: Integer value if valid
    :raises ValueError: If validation fails
    """
    if value is None or str(value).strip() == "":
        raise ValueError("Input cannot be empty")

    text = str(value).strip()
    try:
        result = int(text, 0)
    except ValueError:
        result = _parse_power_of_ten(text)

    if min_value is not None and result < min_value:
        raise ValueError(f"Value must be ≥ {min_value}, got {result}")

    if max_value is not None and result > max_value:
        raise ValueError(f"Value must be ≤ {max_value}, got {result}")

    return result


def _parse_power_of_ten(text: str) -> int:
    # "1e6" style sizes, integers only
    mantissa, sep, exponent = text.lower().partition("e")
    if not sep or not mantissa.isdigit() or not exponent.isdigit():
        raise ValueError(f"Input must be a valid integer, got {text!r}")
    return int(mantissa) * 10 ** int(exponent)


def validate_int_list(value, min_value: Optional[int] = None,
                      max_value: Optional[int] = None) -> List[int]:
    """
    Validates a comma-separated list of integers ("1000,10000,1e5").

    :raises ValueError: If the list is empty or any element is invalid
    """
    parts = [p for p in str(value).split(",") if p.strip() != ""]
    if not parts:
        raise ValueError("List cannot be empty")
    return [validate_int(p, min_value, max_value) for p in parts]


def validate_choice(value, allowed_values: Iterable):
    """
    Validates whether the input is one of the allowed choices.

    :param value: User input
    :param allowed_values: Iterable of valid values
    :return: Value if valid
    :raises ValueError: If invalid
    """
    allowed = tuple(allowed_values)
    if value not in allowed:
        raise ValueError(f"Input must be one of {allowed}, got {value!r}")
    return value


def validate_choice_list(value, allowed_values: Iterable) -> List[str]:
    """
    Validates a comma-separated list of choices, keeping order and dropping repeats.
    """
    allowed = tuple(allowed_values)
    chosen: List[str] = []
    for part in str(value).split(","):
        part = part.strip()
        if part == "":
            continue
        validate_choice(part, allowed)
        if part not in chosen:
            chosen.append(part)
    if not chosen:
        raise ValueError("List cannot be empty")
    return chosen
