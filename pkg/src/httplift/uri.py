"""RFC 3986 URI decomposition, x-www-form-urlencoded query decoding and
effective request URI computation."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Optional, Tuple


class UriError(ValueError):
    pass


@dataclass(frozen=True)
class QueryParam:
    name: str
    value: str


@dataclass(frozen=True)
class UriParts:
    scheme: str
    authority: str
    path: str
    query: Optional[str] = None
    fragment: Optional[str] = None
    params: Tuple[QueryParam, ...] = ()


# Absolute URI with an authority component; the query keeps its raw text.
_URI_RE = re.compile(
    r'^([A-Za-z][A-Za-z0-9+.-]*)://([^/?#]*)([^?#]*)'
    r'(?:\?([^#]*))?(?:#(.*))?$', re.S)

_HEX = "0123456789abcdefABCDEF"


def percent_decode(text: str, plus_as_space: bool = False,
                   base_offset: int = 0) -> str:
    """Decode %XX escapes (and optionally '+' as space, the form-encoding
    rule). Escaped octets are interpreted as UTF-8. Raises UriError naming
    the absolute offset of a malformed or truncated escape."""
    out = bytearray()
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == '%':
            hexpart = text[i + 1:i + 3]
            if len(hexpart) < 2 or hexpart[0] not in _HEX or hexpart[1] not in _HEX:
                raise UriError("malformed percent escape at offset %d"
                               % (base_offset + i))
            out.append(int(hexpart, 16))
            i += 3
        elif ch == '+' and plus_as_space:
            out.append(0x20)
            i += 1
        else:
            out.extend(ch.encode('utf-8'))
            i += 1
    try:
        return out.decode('utf-8')
    except UnicodeDecodeError:
        raise UriError("percent escapes do not decode as UTF-8 at offset %d"
                       % base_offset)


def decode_query_params(query: str) -> List[QueryParam]:
    """Split an x-www-form-urlencoded query into ordered name/value pairs.
    Empty segments are skipped; a segment without '=' yields an empty value."""
    params = []
    offset = 0
    for segment in query.split('&'):
        if segment:
            if '=' in segment:
                rawname, rawvalue = segment.split('=', 1)
            else:
                rawname, rawvalue = segment, ''
            name = percent_decode(rawname, plus_as_space=True,
                                  base_offset=offset)
            value = percent_decode(rawvalue, plus_as_space=True,
                                   base_offset=offset + len(rawname) + 1)
            params.append(QueryParam(name, value))
        offset += len(segment) + 1
    return params


def parse_uri(text: str) -> UriParts:
    """Decompose an absolute URI into its five components. The components
    exactly partition the input: recompose(parse_uri(s)) == s."""
    if not text:
        raise UriError("empty URI")
    m = _URI_RE.match(text)
    if not m:
        raise UriError("not an absolute URI with authority: %r" % text)
    scheme, authority, path, query, fragment = m.groups()
    params = tuple(decode_query_params(query)) if query is not None else ()
    return UriParts(scheme=scheme, authority=authority, path=path,
                    query=query, fragment=fragment, params=params)


def recompose(u: UriParts) -> str:
    out = "%s://%s%s" % (u.scheme, u.authority, u.path)
    if u.query is not None:
        out += "?" + u.query
    if u.fragment is not None:
        out += "#" + u.fragment
    return out


def id_res(u: UriParts) -> str:
    """The resource identifier: scheme, authority and path with both the
    query and the fragment stripped."""
    return "%s://%s%s" % (u.scheme, u.authority, u.path)


def effective_request_uri(target: str, host: Optional[str],
                          scheme: str = "http") -> UriParts:
    """Combine a wire-level request target with the Host header and scheme
    into an absolute URI. Supports origin-form and absolute-form targets."""
    if scheme not in ("http", "https"):
        raise UriError("unsupported scheme %r" % scheme)
    if target == "*":
        raise UriError("asterisk-form request target is not supported")
    if target.startswith("/"):
        if not host:
            raise UriError("origin-form request target requires a Host header")
        return parse_uri("%s://%s%s" % (scheme, host, target))
    if "://" in target:
        return parse_uri(target)
    raise UriError("unsupported request-target form: %r" % target)
