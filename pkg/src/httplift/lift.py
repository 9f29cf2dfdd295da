"""Lift the HTTP domain model into RDF datasets conforming to the embedded
ontology, materializing the lifted header properties (Location,
Content-Type, Accept) and named-graph bodies so queries run without a
reasoner."""

from __future__ import annotations

import urllib.parse
from typing import Dict, Optional, Set, Tuple

from . import vocab
from .model import (
    Body, Conversation, Header, Interaction, Request, Response,
    STANDARD_METHODS, standard_status_name,
)
from .rdf import (
    RDF_TYPE, XSD_INTEGER, BlankNode, Dataset, Graph, Iri, Literal, Term,
    Triple,
)
from .uri import UriError, UriParts, id_res, parse_uri, recompose

DEFAULT_URI_NODE_BASE = "urn:uri:"


def uri_node(u: UriParts, base: Optional[str] = None) -> Iri:
    """Deterministic IRI for a URI node: base plus the percent-encoded
    recomposed URI."""
    prefix = base or DEFAULT_URI_NODE_BASE
    return Iri(prefix + urllib.parse.quote(recompose(u), safe=""))


class Lifter:
    """One lifting run: a monotonic blank-node counter plus a URI-node cache
    so identical URIs share one node across the whole conversation."""

    def __init__(self, base: Optional[str] = None):
        self.base = base
        self._counter = 0
        self._lifted_uris: Set[Iri] = set()
        self.triples: Set[Triple] = set()
        self.named: Dict[Term, Graph] = {}
        self._msg_index = 0

    def bnode(self) -> BlankNode:
        self._counter += 1
        return BlankNode("b%d" % self._counter)

    def add(self, s: Term, p: Iri, o: Term):
        self.triples.add(Triple(s, p, o))

    def dataset(self) -> Dataset:
        return Dataset(Graph(self.triples), self.named)

    def _message_node(self, kind: str) -> Term:
        self._msg_index += 1
        if self.base is None:
            return self.bnode()
        return Iri("%s%s%d" % (self.base, kind, self._msg_index))

    # -- URIs ---------------------------------------------------------------

    def lift_uri(self, u: UriParts) -> Iri:
        node = uri_node(u, self.base)
        if node in self._lifted_uris:
            return node
        self._lifted_uris.add(node)
        self.add(node, RDF_TYPE, vocab.URI)
        self.add(node, vocab.SCHEME, Literal(u.scheme))
        self.add(node, vocab.AUTHORITY, Literal(u.authority))
        self.add(node, vocab.PATH, Literal(u.path))
        if u.query is not None:
            self.add(node, vocab.QUERY, Literal(u.query))
        if u.fragment is not None:
            self.add(node, vocab.FRAGMENT, Literal(u.fragment))
        self.add(node, vocab.ID_RES, Literal(id_res(u)))
        for param in u.params:
            pnode = self.bnode()
            self.add(node, vocab.QUERY_PARAMS, pnode)
            self.add(pnode, RDF_TYPE, vocab.QUERY_PARAM)
            self.add(pnode, vocab.PARAM_NAME, Literal(param.name))
            self.add(pnode, vocab.PARAM_VALUE, Literal(param.value))
        return node

    # -- Headers ------------------------------------------------------------

    def lift_header(self, h: Header, msg_node: Term,
                    request_uri: Optional[UriParts]):
        hnode = self.bnode()
        self.add(msg_node, vocab.HDR, hnode)
        self.add(hnode, RDF_TYPE, vocab.HEADER)
        self.add(hnode, vocab.HDR_NAME, Literal(h.name))
        self.add(hnode, vocab.HDR_VALUE, Literal(h.value))
        lname = h.name.lower()
        if lname == "location":
            self.add(hnode, RDF_TYPE, vocab.LOCATION_HEADER)
            self.add(hnode, vocab.IS_LOCATION_HEADER, hnode)
            target = self._resolve_location(h.value, request_uri)
            if target is not None:
                unode = self.lift_uri(target)
                self.add(hnode, vocab.LINK, unode)
                # Property chain hdr . isLocationHeader . link,
                # materialized eagerly.
                self.add(msg_node, vocab.LOCATION, unode)
        elif lname == "content-type":
            self.add(hnode, RDF_TYPE, vocab.CONTENT_TYPE_HEADER)
            self.add(msg_node, vocab.CONTENT_TYPE, Literal(h.value))
        elif lname == "accept":
            self.add(hnode, RDF_TYPE, vocab.ACCEPT_HEADER)
            anode = self.bnode()
            self.add(msg_node, vocab.ACCEPT, anode)
            for media_range in h.value.split(","):
                media_range = media_range.strip()
                if media_range:
                    self.add(anode, vocab.MEDIA_TYPE, Literal(media_range))

    def _resolve_location(self, value: str,
                          request_uri: Optional[UriParts]) -> Optional[UriParts]:
        """Resolve a Location value: absolute URIs as-is, absolute-path
        references against the request URI. Other forms stay unresolved
        (validation rule R10 reports them)."""
        value = value.strip()
        try:
            if "://" in value:
                return parse_uri(value)
            if value.startswith("/") and request_uri is not None:
                return parse_uri("%s://%s%s" % (request_uri.scheme,
                                                request_uri.authority, value))
        except UriError:
            return None
        return None

    # -- Bodies -------------------------------------------------------------

    def lift_body(self, b: Body, msg_node: Term):
        cnode = self.bnode()
        self.add(msg_node, vocab.BODY, cnode)
        self.add(cnode, RDF_TYPE, vocab.CONTENT)
        if b.rdf is not None:
            self.add(cnode, RDF_TYPE, vocab.CONTENT_AS_RDF)
            if isinstance(msg_node, Iri):
                gname: Term = Iri(msg_node.value + "/body-graph")
            else:
                gname = self.bnode()
            # Blank-node labels are dataset-scoped: keep the body graph's
            # labels out of the lifter's namespace.
            tag = len(self.named) + 1
            self.named[gname] = Graph(
                Triple(*(BlankNode("body%d-%s" % (tag, x.label))
                         if isinstance(x, BlankNode) else x
                         for x in (t.subject, t.predicate, t.object)))
                for t in b.rdf)
            self.add(gname, RDF_TYPE, vocab.SD_GRAPH)
            self.add(cnode, vocab.ABOUT, gname)

    # -- Messages -----------------------------------------------------------

    def _lift_method(self, name: str) -> Term:
        if name in STANDARD_METHODS:
            node: Term = vocab.method_iri(name)
        else:
            node = self.bnode()
        self.add(node, RDF_TYPE, vocab.METHOD)
        self.add(node, vocab.METHOD_NAME, Literal(name))
        return node

    def _lift_status(self, code: int) -> Term:
        name = standard_status_name(code)
        if name is not None:
            node: Term = vocab.status_iri(name)
        else:
            node = self.bnode()
        self.add(node, RDF_TYPE, vocab.STATUS_CODE)
        self.add(node, vocab.STATUS_CODE_NUMBER,
                 Literal(str(code), XSD_INTEGER))
        return node

    def lift_request(self, r: Request) -> Term:
        node = self._message_node("req")
        self.add(node, RDF_TYPE, vocab.REQUEST)
        self.add(node, vocab.MTHD_PROP, self._lift_method(r.method.name))
        self.add(node, vocab.URI_PROP, self.lift_uri(r.uri))
        if r.http_version:
            self.add(node, vocab.HTTP_VERSION, Literal(r.http_version))
        for h in r.headers:
            self.lift_header(h, node, r.uri)
        if r.body is not None:
            self.lift_body(r.body, node)
        return node

    def lift_response(self, r: Response, interim: bool,
                      request_uri: Optional[UriParts]) -> Term:
        node = self._message_node("resp")
        self.add(node, RDF_TYPE, vocab.RESPONSE)
        self.add(node, RDF_TYPE,
                 vocab.INTERIM_RESPONSE if interim else vocab.FINAL_RESPONSE)
        self.add(node, vocab.SC_PROP, self._lift_status(r.status_code))
        if r.http_version:
            self.add(node, vocab.HTTP_VERSION, Literal(r.http_version))
        for h in r.headers:
            self.lift_header(h, node, request_uri)
        if r.body is not None:
            self.lift_body(r.body, node)
        return node

    def lift_interaction(self, i: Interaction) -> Term:
        qnode = self.lift_request(i.request)
        for interim in i.interim_responses:
            rnode = self.lift_response(interim, True, i.request.uri)
            self.add(qnode, vocab.RESP, rnode)
        if i.final_response is not None:
            rnode = self.lift_response(i.final_response, False, i.request.uri)
            self.add(qnode, vocab.RESP, rnode)
        return qnode


def lift_interaction(i: Interaction, base: Optional[str] = None) -> Dataset:
    lifter = Lifter(base)
    lifter.lift_interaction(i)
    return lifter.dataset()


def lift_conversation(c: Conversation, base: Optional[str] = None) -> Dataset:
    """Lift a whole conversation into one dataset. URI nodes are unified by
    their recomposed absolute URI, so a Location target and a later request
    URI share a single node."""
    lifter = Lifter(base)
    for i in c.interactions:
        lifter.lift_interaction(i)
    return lifter.dataset()


def lift_uri(u: UriParts, base: Optional[str] = None) -> Tuple[Term, Set[Triple]]:
    """Lift a single URI value; returns its node and the asserted triples."""
    lifter = Lifter(base)
    node = lifter.lift_uri(u)
    return node, lifter.triples


def vocabulary_scan(dataset: Dataset) -> Set[Iri]:
    """Closed-vocabulary check over a lifted dataset's interaction graph:
    predicates and class IRIs not found in the embedded ontology or the
    documented extension set. Body named graphs carry user vocabulary and
    are not scanned."""
    allowed = vocab.known_terms()
    unknown = set()
    for t in dataset.default_graph:
        if t.predicate not in allowed:
            unknown.add(t.predicate)
        if t.predicate == RDF_TYPE and isinstance(t.object, Iri) \
                and t.object not in allowed:
            unknown.add(t.object)
    return unknown
