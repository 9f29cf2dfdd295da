"""Protocol-level domain model: methods, headers, bodies, requests,
responses, status classification, interactions and conversations."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Tuple

from .rdf import Graph
from .uri import UriParts

# RFC 7230 token characters.
_TCHAR = set("!#$%&'*+-.^_`|~"
             "0123456789"
             "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
             "abcdefghijklmnopqrstuvwxyz")


def is_token(text: str) -> bool:
    return bool(text) and all(c in _TCHAR for c in text)


@dataclass(frozen=True)
class Method:
    name: str

    def __post_init__(self):
        if not is_token(self.name):
            raise ValueError("method name must be a non-empty token: %r"
                             % self.name)


STANDARD_METHODS = ("GET", "HEAD", "POST", "PUT", "DELETE", "CONNECT",
                    "OPTIONS", "TRACE", "PATCH")

GET = Method("GET")
HEAD = Method("HEAD")
POST = Method("POST")
PUT = Method("PUT")
DELETE = Method("DELETE")
CONNECT = Method("CONNECT")
OPTIONS = Method("OPTIONS")
TRACE = Method("TRACE")
PATCH = Method("PATCH")


@dataclass(frozen=True)
class Header:
    """A header field. Names compare case-insensitively, values exactly;
    the original name casing is preserved."""
    name: str
    value: str

    def __post_init__(self):
        if not is_token(self.name):
            raise ValueError("header name must be a non-empty token: %r"
                             % self.name)

    def named(self, name: str) -> bool:
        return self.name.lower() == name.lower()


@dataclass(frozen=True)
class Body:
    media_type: Optional[str] = None
    octets: bytes = b""
    rdf: Optional[Graph] = None


@dataclass(frozen=True)
class Request:
    method: Method
    uri: UriParts
    headers: Tuple[Header, ...] = ()
    body: Optional[Body] = None
    http_version: Optional[str] = None


@dataclass(frozen=True)
class Response:
    status_code: int
    headers: Tuple[Header, ...] = ()
    body: Optional[Body] = None
    http_version: Optional[str] = None

    def __post_init__(self):
        if not (0 <= self.status_code <= 999):
            raise ValueError("status code must have at most 3 digits: %r"
                             % self.status_code)


class StatusClass(enum.Enum):
    INFORMATIONAL = "Informational"
    SUCCESSFUL = "Successful"
    REDIRECTION = "Redirection"
    CLIENT_ERROR = "ClientError"
    SERVER_ERROR = "ServerError"


def status_class(code: int) -> Optional[StatusClass]:
    """The status class for `code`, or None for codes outside the five
    100-wide ranges. Codes outside [0, 999] are rejected."""
    if not (0 <= code <= 999):
        raise ValueError("status code out of range: %r" % code)
    if 100 <= code <= 199:
        return StatusClass.INFORMATIONAL
    if 200 <= code <= 299:
        return StatusClass.SUCCESSFUL
    if 300 <= code <= 399:
        return StatusClass.REDIRECTION
    if 400 <= code <= 499:
        return StatusClass.CLIENT_ERROR
    if 500 <= code <= 599:
        return StatusClass.SERVER_ERROR
    return None


def is_interim(response: Response) -> bool:
    return status_class(response.status_code) is StatusClass.INFORMATIONAL


# Standard status-code individuals: code -> vocabulary local name.
STATUS_NAMES = {
    100: "Continue",
    101: "SwitchingProtocols",
    102: "Processing",
    200: "OK",
    201: "Created",
    202: "Accepted",
    203: "NonAuthoritativeInformation",
    204: "NoContent",
    205: "ResetContent",
    206: "PartialContent",
    207: "MultiStatus",
    226: "IMUsed",
    300: "MultipleChoices",
    301: "MovedPermanently",
    302: "Found",
    303: "SeeOther",
    304: "NotModified",
    305: "UseProxy",
    306: "Reserved",
    307: "TemporaryRedirect",
    400: "BadRequest",
    401: "Unauthorized",
    402: "PaymentRequired",
    403: "Forbidden",
    404: "NotFound",
    405: "MethodNotAllowed",
    406: "NotAcceptable",
    407: "ProxyAuthenticationRequired",
    408: "RequestTimeout",
    409: "Conflict",
    410: "Gone",
    411: "LengthRequired",
    412: "PreconditionFailed",
    413: "RequestEntityTooLarge",
    414: "RequestURITooLong",
    415: "UnsupportedMediaType",
    416: "RequestedRangeNotSatisfiable",
    417: "ExpectationFailed",
    422: "UnprocessableEntity",
    423: "Locked",
    424: "FailedDependency",
    426: "UpgradeRequired",
    500: "InternalServerError",
    501: "NotImplemented",
    502: "BadGateway",
    503: "ServiceUnavailable",
    504: "GatewayTimeout",
    505: "HTTPVersionNotSupported",
    506: "VariantAlsoNegotiates",
    507: "InsufficientStorage",
    510: "NotExtended",
}

STATUS_CODES = {name: code for code, name in STATUS_NAMES.items()}


def standard_status_name(code: int) -> Optional[str]:
    return STATUS_NAMES.get(code)


def header_value(headers, name: str) -> Optional[str]:
    """First header value whose name matches case-insensitively."""
    for h in headers:
        if h.named(name):
            return h.value
    return None


@dataclass(frozen=True)
class Interaction:
    """One request with its interim (1xx) responses and at most one final
    response."""
    request: Request
    interim_responses: Tuple[Response, ...] = ()
    final_response: Optional[Response] = None

    def __post_init__(self):
        for r in self.interim_responses:
            if not is_interim(r):
                raise ValueError("interim response must have a 1xx status, "
                                 "got %d" % r.status_code)
        if self.final_response is not None and is_interim(self.final_response):
            raise ValueError("final response must not have a 1xx status")

    @property
    def responses(self) -> Tuple[Response, ...]:
        if self.final_response is None:
            return self.interim_responses
        return self.interim_responses + (self.final_response,)


@dataclass(frozen=True)
class Conversation:
    interactions: Tuple[Interaction, ...] = ()
