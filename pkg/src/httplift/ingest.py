"""Parse concrete HTTP/1.1 traffic into conversations, from raw message
bytes, plain-text transcripts or HAR 1.2 archives."""

from __future__ import annotations

import base64
import json
from typing import List, Optional, Tuple, Union

from . import turtle
from .model import (
    Body, Conversation, Header, Interaction, Method, Request, Response,
    header_value, is_interim,
)
from .rdf import Graph
from .uri import UriError, effective_request_uri, parse_uri


class IngestError(ValueError):
    pass


# Media types whose bodies are parsed into RDF graphs.
RDF_MEDIA_TYPES = ("text/turtle", "application/trig")


def _split_head_body(raw: bytes) -> Tuple[str, bytes]:
    for sep in (b"\r\n\r\n", b"\n\n"):
        idx = raw.find(sep)
        if idx != -1:
            return raw[:idx].decode("iso-8859-1"), raw[idx + len(sep):]
    return raw.decode("iso-8859-1"), b""


def _parse_headers(lines: List[str]) -> List[Header]:
    headers = []
    for line in lines:
        line = line.rstrip("\r")
        if not line:
            continue
        if ":" not in line:
            raise IngestError("malformed header line: %r" % line)
        name, value = line.split(":", 1)
        headers.append(Header(name.strip(), value.strip()))
    return headers


def _frame_body(headers: List[Header], rest: bytes) -> bytes:
    coding = header_value(headers, "Transfer-Encoding")
    if coding and coding.lower() != "identity":
        raise IngestError("transfer-coding %r is not supported" % coding)
    length = header_value(headers, "Content-Length")
    if length is not None:
        try:
            n = int(length)
        except ValueError:
            raise IngestError("bad Content-Length: %r" % length)
        return rest[:n]
    return rest


def _make_body(headers: List[Header], octets: bytes) -> Optional[Body]:
    if not octets:
        return None
    media_type = header_value(headers, "Content-Type")
    rdf = None
    if media_type:
        base = media_type.split(";", 1)[0].strip().lower()
        if base in RDF_MEDIA_TYPES:
            text = octets.decode("utf-8")
            try:
                if base == "application/trig":
                    dataset = turtle.parse_trig(text)
                    triples = set(dataset.default_graph)
                    for g in dataset.named_graphs.values():
                        triples |= set(g)
                    rdf = Graph(triples)
                else:
                    rdf = turtle.parse_turtle(text)
            except turtle.ParseError as e:
                raise IngestError("unparseable RDF body: %s" % e)
    return Body(media_type=media_type, octets=octets, rdf=rdf)


def _as_bytes(raw: Union[bytes, str]) -> bytes:
    return raw.encode("utf-8") if isinstance(raw, str) else raw


def parse_http_request(raw: Union[bytes, str]) -> Request:
    """Parse a raw HTTP/1.1 request. The effective URI is computed from the
    request target and (for origin-form targets) the Host header."""
    head, rest = _split_head_body(_as_bytes(raw))
    lines = head.split("\n")
    parts = lines[0].rstrip("\r").split()
    if len(parts) != 3:
        raise IngestError("malformed request line: %r" % lines[0])
    method_token, target, version = parts
    if not version.startswith("HTTP/"):
        raise IngestError("malformed request line: %r" % lines[0])
    headers = _parse_headers(lines[1:])
    try:
        method = Method(method_token)
        uri = effective_request_uri(target, header_value(headers, "Host"),
                                    "http")
    except (ValueError, UriError) as e:
        raise IngestError(str(e))
    octets = _frame_body(headers, rest)
    return Request(method=method, uri=uri, headers=tuple(headers),
                   body=_make_body(headers, octets), http_version=version)


def parse_http_response(raw: Union[bytes, str]) -> Response:
    """Parse a raw HTTP/1.1 response. Both status-line orders are accepted:
    'HTTP/1.1 201 Created' and the inverted '201 Created HTTP/1.1'."""
    head, rest = _split_head_body(_as_bytes(raw))
    lines = head.split("\n")
    parts = lines[0].rstrip("\r").split()
    if len(parts) < 2:
        raise IngestError("malformed status line: %r" % lines[0])
    if parts[0].startswith("HTTP/"):
        version, code_token = parts[0], parts[1]
    elif parts[-1].startswith("HTTP/"):
        version, code_token = parts[-1], parts[0]
    else:
        raise IngestError("malformed status line: %r" % lines[0])
    if not code_token.isdigit():
        raise IngestError("non-numeric status code: %r" % code_token)
    if len(code_token) != 3:
        raise IngestError("status code must have exactly 3 digits: %r"
                          % code_token)
    headers = _parse_headers(lines[1:])
    octets = _frame_body(headers, rest)
    return Response(status_code=int(code_token), headers=tuple(headers),
                    body=_make_body(headers, octets), http_version=version)


def render_request(request: Request) -> bytes:
    """Serialize a request back to wire form (origin-form target)."""
    target = request.uri.path or "/"
    if request.uri.query is not None:
        target += "?" + request.uri.query
    version = request.http_version or "HTTP/1.1"
    lines = ["%s %s %s" % (request.method.name, target, version)]
    lines.extend("%s: %s" % (h.name, h.value) for h in request.headers)
    head = "\r\n".join(lines) + "\r\n\r\n"
    body = request.body.octets if request.body else b""
    return head.encode("iso-8859-1") + body


def render_response(response: Response) -> bytes:
    """Serialize a response back to wire form (RFC status-line order)."""
    version = response.http_version or "HTTP/1.1"
    lines = ["%s %d" % (version, response.status_code)]
    lines.extend("%s: %s" % (h.name, h.value) for h in response.headers)
    head = "\r\n".join(lines) + "\r\n\r\n"
    body = response.body.octets if response.body else b""
    return head.encode("iso-8859-1") + body


# --------------------------------------------------------------------------
# Transcript format: message blocks separated by lines of exactly "---".

def _is_response_block(block: str) -> bool:
    first = block.split("\n", 1)[0].strip()
    token = first.split()[0] if first.split() else ""
    return token.startswith("HTTP/") or token.isdigit()


def load_transcript(text: str) -> Conversation:
    """Pair a transcript's messages into interactions: each request opens
    one, 1xx responses accumulate as interims, the first non-1xx response
    closes it. A trailing request without a final response is allowed."""
    blocks = []
    current: List[str] = []
    for line in text.split("\n"):
        if line.strip() == "---":
            blocks.append("\n".join(current))
            current = []
        else:
            current.append(line)
    blocks.append("\n".join(current))
    blocks = [b for b in blocks if b.strip()]

    interactions = []
    pending: Optional[Request] = None
    interims: List[Response] = []
    for block in blocks:
        if _is_response_block(block):
            response = parse_http_response(block)
            if pending is None:
                raise IngestError("response before any request")
            if is_interim(response):
                interims.append(response)
            else:
                interactions.append(Interaction(pending, tuple(interims),
                                                response))
                pending, interims = None, []
        else:
            request = parse_http_request(block)
            if pending is not None:
                interactions.append(Interaction(pending, tuple(interims)))
                interims = []
            pending = request
    if pending is not None:
        interactions.append(Interaction(pending, tuple(interims)))
    return Conversation(tuple(interactions))


# --------------------------------------------------------------------------
# HAR 1.2 subset.

def load_har(text: str) -> Conversation:
    """Each HAR entry becomes one interaction with a final response. Entries
    are ordered by startedDateTime, falling back to file order."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise IngestError("not a HAR document: %s" % e)
    if not isinstance(doc, dict) or "log" not in doc:
        raise IngestError("not a HAR document: missing 'log'")
    entries = doc["log"].get("entries", [])
    indexed = sorted(enumerate(entries),
                     key=lambda pair: (pair[1].get("startedDateTime", ""),
                                       pair[0]))
    interactions = []
    for _, entry in indexed:
        interactions.append(_har_interaction(entry))
    return Conversation(tuple(interactions))


def _har_headers(items) -> List[Header]:
    return [Header(h["name"], h.get("value", "")) for h in (items or [])]


def _har_interaction(entry: dict) -> Interaction:
    req = entry.get("request") or {}
    resp = entry.get("response") or {}
    if "method" not in req or "url" not in req or "status" not in resp:
        raise IngestError("HAR entry missing method, url or status")
    try:
        uri = parse_uri(req["url"])
    except UriError as e:
        raise IngestError(str(e))
    req_headers = _har_headers(req.get("headers"))
    req_body = None
    post = req.get("postData")
    if post and post.get("text"):
        octets = post["text"].encode("utf-8")
        headers = list(req_headers)
        if post.get("mimeType") and not header_value(headers, "Content-Type"):
            headers.append(Header("Content-Type", post["mimeType"]))
            req_headers = headers
        req_body = _make_body(req_headers, octets)
    request = Request(method=Method(req["method"]), uri=uri,
                      headers=tuple(req_headers), body=req_body,
                      http_version=req.get("httpVersion") or "HTTP/1.1")

    resp_headers = _har_headers(resp.get("headers"))
    content = resp.get("content") or {}
    octets = b""
    if content.get("text"):
        if content.get("encoding") == "base64":
            octets = base64.b64decode(content["text"])
        else:
            octets = content["text"].encode("utf-8")
    headers = list(resp_headers)
    if content.get("mimeType") and not header_value(headers, "Content-Type"):
        headers.append(Header("Content-Type", content["mimeType"]))
        resp_headers = headers
    status = int(resp["status"])
    response = Response(status_code=status, headers=tuple(resp_headers),
                        body=_make_body(resp_headers, octets),
                        http_version=resp.get("httpVersion") or "HTTP/1.1")
    if is_interim(response):
        # A lone 1xx entry: carried as an interim with no final response.
        return Interaction(request, (response,))
    return Interaction(request, (), response)
