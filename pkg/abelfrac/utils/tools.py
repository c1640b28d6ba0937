from fractions import Fraction
from typing import Any, Dict, List, Sequence, Union

import jax
import numpy as np
from chex import Array


def parse_fraction(value: Union[str, float, int]) -> float:
    """
    Parses "4/5", "0.8" or "1e-10" exactly with Fraction before rounding once to binary64,
    so "4/5" gives the float nearest to 4/5.
    """
    if isinstance(value, (int, float)):
        return float(value)
    text = str(value).strip()
    try:
        return float(Fraction(text))
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"{value!r} is not a number or a fraction") from e


def parse_list(value: Union[str, Sequence], item=parse_fraction) -> List:
    """Parses a comma separated string (or an already split sequence) into a list"""
    if isinstance(value, str):
        parts = [p for p in value.replace(" ", "").split(",") if p != ""]
    elif isinstance(value, (int, float)):
        parts = [value]
    else:
        parts = list(value)
    return [item(p) for p in parts]


def parse_int(value: Union[str, int, float]) -> int:
    f = parse_fraction(value)
    if not f.is_integer():
        raise ValueError(f"{value!r} is not an integer")
    return int(f)


def fit_order(h: Array, errors: Array) -> float:
    """Least squares slope of log(errors) against log(h), the empirical order of convergence"""
    h, errors = np.asarray(h, dtype=np.float64), np.asarray(errors, dtype=np.float64)
    if len(h) < 2:
        raise ValueError("need at least two step sizes to fit an order")
    slope, _ = np.polyfit(np.log(h), np.log(errors), 1)
    return float(slope)


def flatten_struct_to_dict(tree) -> Dict[str, Any]:
    """
    Flattens any PyTree (flax struct dataclasses included) into a dict keyed by "/" joined paths.
    numpy arrays become lists of python floats. None fields and static fields are not leaves, so
    they are left out.
    """
    flattened, _ = jax.tree_util.tree_flatten_with_path(tree)
    out = dict()
    for key_path, value in flattened:
        key_path_str = []
        for part in key_path:
            if isinstance(part, jax.tree_util.DictKey):
                key_path_str.append(part.key)
            elif isinstance(part, jax.tree_util.SequenceKey):
                key_path_str.append(str(part.idx))
            else:
                key_path_str.append(part.name)
        if isinstance(value, np.ndarray):
            value = value.tolist()
        elif isinstance(value, np.generic):
            value = value.item()
        out["/".join(key_path_str)] = value
    return out
