"""Checked text assembly: plain concatenation and a placeholder formatter.

``format_render`` scans its format text once, left to right.  ``{}``
consumes the next argument; ``{`` followed by any other character (or by
nothing, at the end of the text) is emitted literally together with that
character.  A placeholder with no argument left fails with "argument
missing"; arguments left over once the text is exhausted fail with "too
many arguments".  There is no escape for a literal ``{}``.

Rendering is the host's default text form (``str``), which is deterministic
for a given value; wrapped numbers render as their underlying value.  The
functions build and return text, they never touch an output device, so
errors can be reported without a partial-output contract.

Everything here is a pure function and thread-safe.
"""

from __future__ import annotations

from enum import Enum

__all__ = ["FormatErrorKind", "FormatError", "render", "print_concat", "format_render"]


class FormatErrorKind(Enum):
    ARGUMENT_MISSING = "argument missing"
    TOO_MANY_ARGUMENTS = "too many arguments"


class FormatError(ValueError):
    """Placeholder count and argument count disagree.

    ``kind`` says in which direction; ``position`` is the offset in the
    format text where the scan detected it.
    """

    def __init__(self, kind: FormatErrorKind, position: int) -> None:
        self.kind = kind
        self.position = position
        super().__init__(f"{kind.value} (format offset {position})")


def render(value) -> str:
    """Deterministic text form of a single value."""
    return str(value)


def print_concat(*args) -> str:
    """Concatenation of every argument's rendering, in order."""
    return "".join(render(a) for a in args)


def format_render(fmt, *args) -> str:
    """Substitute ``args`` for ``{}`` placeholders in ``fmt``.

    ``fmt`` may be None, which renders as empty text (arguments supplied
    alongside it are still too many).  Raises ``FormatError`` when the
    placeholder count and argument count disagree; succeeds exactly when
    they match.
    """
    if fmt is None:
        fmt = ""
    out: list[str] = []
    next_arg = 0
    i = 0
    n = len(fmt)
    while i < n:
        ch = fmt[i]
        if ch == "{":
            if i + 1 < n and fmt[i + 1] == "}":
                if next_arg >= len(args):
                    raise FormatError(FormatErrorKind.ARGUMENT_MISSING, i)
                out.append(render(args[next_arg]))
                next_arg += 1
                i += 2
                continue
            out.append("{")
            if i + 1 < n:
                out.append(fmt[i + 1])
                i += 2
            else:
                i += 1
            continue
        out.append(ch)
        i += 1
    if next_arg < len(args):
        raise FormatError(FormatErrorKind.TOO_MANY_ARGUMENTS, n)
    return "".join(out)
