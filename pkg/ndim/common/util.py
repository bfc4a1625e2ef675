# Copyright 2016 Cloudbase Solutions Srl
#
#    Licensed under the Apache License, Version 2.0 (the "License"); you may
#    not use this file except in compliance with the License. You may obtain
#    a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
#    WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
#    License for the specific language governing permissions and limitations
#    under the License.

"""A collection of utilities used across the project."""

import mpmath
import six

from ndim.common import exception


def get_attribute(root, attribute):
    """Search for the received attribute name in the object tree.

    :param root: the root object
    :param attribute: the name of the required attribute
    """
    command_tree = [root]
    while command_tree:
        current_object = command_tree.pop()
        if hasattr(current_object, attribute):
            return getattr(current_object, attribute)

        parent = getattr(current_object, "parent", None)
        if parent:
            command_tree.append(parent)

    raise exception.NdimException("The %(attribute)r attribute is "
                                  "missing from the object tree.",
                                  attribute=attribute)


def to_mpf(value, name="value"):
    """Convert the received value to a finite mpmath real.

    Strings are converted directly so that decimal inputs such as
    "3.8" are not rounded through a binary float first.
    """
    if isinstance(value, mpmath.mpf):
        number = value
    else:
        if isinstance(value, six.string_types):
            value = value.strip()
        try:
            number = mpmath.mpf(value)
        except (TypeError, ValueError):
            raise exception.Invalid("%(name)s: %(value)r is not a real "
                                    "number.", name=name, value=value)

    if not mpmath.isfinite(number):
        raise exception.Invalid("%(name)s must be finite, got %(value)s.",
                                name=name, value=value)
    return number


def parse_numbers(text, count=None, name="exponents"):
    """Parse a comma separated list of real numbers.

    :param text: the raw text, for example "-1,-1,-1,-1,-1"
    :param count: the expected number of values, if any
    """
    values = [to_mpf(item, name) for item in text.split(",")
              if item.strip()]
    if count is not None and len(values) != count:
        raise exception.Invalid("%(name)s: expected %(count)d values, "
                                "got %(found)d.", name=name, count=count,
                                found=len(values))
    return values


def parse_grid(text):
    """Parse a grid of the form "start:stop:count".

    The returned list contains `count` equally spaced points, including
    both ends of the interval.
    """
    try:
        start, stop, count = text.split(":")
        count = int(count)
    except ValueError:
        raise exception.Invalid("Invalid grid %(grid)r, expected "
                                "start:stop:count.", grid=text)

    if count < 1:
        raise exception.Invalid("The grid %(grid)r is empty.", grid=text)

    start, stop = to_mpf(start, "grid start"), to_mpf(stop, "grid stop")
    if count == 1:
        return [start]
    return mpmath.linspace(start, stop, count)


def format_number(value, digits):
    """Return the decimal representation of the received number."""
    if value is None:
        return None
    return mpmath.nstr(value, digits, min_fixed=-6, max_fixed=digits)
