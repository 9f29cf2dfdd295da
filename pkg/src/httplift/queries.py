"""Executable competency questions over lifted datasets, built on triple
matching and property-path evaluation."""

from __future__ import annotations

from typing import List, Mapping

from . import vocab
from .rdf import (
    RDF_FIRST, RDF_NIL, RDF_REST, RDF_TYPE, Dataset, Graph, Iri, Literal,
    Term,
)
from .turtle import format_term


class Binding(Mapping):
    """An immutable variable-name to term mapping."""

    def __init__(self, **variables):
        self._vars = dict(variables)

    def __getitem__(self, name):
        return self._vars[name]

    def __iter__(self):
        return iter(self._vars)

    def __len__(self):
        return len(self._vars)

    def __eq__(self, other):
        if isinstance(other, Binding):
            return self._vars == other._vars
        return self._vars == other

    def __repr__(self):
        return "Binding(%s)" % ", ".join(
            "%s=%r" % kv for kv in sorted(self._vars.items()))


def _key(term: Term) -> str:
    return format_term(term, vocab.PREFIXES)


def _sorted(bindings: List[Binding], *names: str) -> List[Binding]:
    return sorted(bindings, key=lambda b: tuple(_key(b[n]) for n in names))


def cq1_media_types(d: Dataset) -> List[Binding]:
    """Media types of message bodies: (m, mt) pairs where the message has a
    body and a declared content type."""
    g = d.default_graph
    out = []
    for t in g.match(None, vocab.CONTENT_TYPE, None):
        if g.objects(t.subject, vocab.BODY):
            out.append(Binding(m=t.subject, mt=t.object))
    return _sorted(out, "m", "mt")


def cq2_interaction_status(d: Dataset) -> List[Binding]:
    """Status code numbers per interaction: (q, status) for every response
    of every request."""
    g = d.default_graph
    out = []
    for t in g.match(None, vocab.RESP, None):
        for s in g.objects(t.object, vocab.SC_PROP):
            for n in g.objects(s, vocab.STATUS_CODE_NUMBER):
                out.append(Binding(q=t.subject, status=n))
    return _sorted(out, "q", "status")


def cq3_locations(d: Dataset) -> List[Binding]:
    """URI nodes provided by Location headers of responses."""
    g = d.default_graph
    out = []
    seen = set()
    for t in g.match(None, vocab.RESP, None):
        for u in g.objects(t.object, vocab.LOCATION):
            if u not in seen:
                seen.add(u)
                out.append(Binding(next=u))
    return _sorted(out, "next")


def cq4_conversation_status(d: Dataset) -> List[Binding]:
    """Final status codes of requests that dereference a Location target of
    an earlier response (pure join, no temporal constraint)."""
    g = d.default_graph
    targets = {u for t in g.match(None, vocab.RESP, None)
               for u in g.objects(t.object, vocab.LOCATION)}
    out = []
    for t in g.match(None, vocab.URI_PROP, None):
        if t.object not in targets:
            continue
        for r in g.objects(t.subject, vocab.RESP):
            if vocab.FINAL_RESPONSE not in g.objects(r, RDF_TYPE):
                continue
            for s in g.objects(r, vocab.SC_PROP):
                for n in g.objects(s, vocab.STATUS_CODE_NUMBER):
                    out.append(Binding(status=n))
    return _sorted(out, "status")


def cq5_negotiation(d: Dataset, request: Term) -> bool:
    """ASK: does some media range of the request's Accept header and the
    response's content type satisfy substring containment either way?
    False when either side is absent."""
    g = d.default_graph
    accepted = {o.lexical
                for a in g.objects(request, vocab.ACCEPT)
                for o in g.objects(a, vocab.MEDIA_TYPE)
                if isinstance(o, Literal)}
    declared = {o.lexical
                for r in g.objects(request, vocab.RESP)
                for o in g.objects(r, vocab.CONTENT_TYPE)
                if isinstance(o, Literal)}
    return any(a in c or c in a for a in accepted for c in declared)


def _flatten(graph: Graph, node: Term) -> List[Term]:
    """RDF collection members in list order; a non-collection node is
    returned as-is."""
    if node == RDF_NIL:
        return []
    if not graph.objects(node, RDF_FIRST):
        return [node]
    members = []
    seen = set()
    while node != RDF_NIL and node not in seen:
        seen.add(node)
        firsts = graph.objects(node, RDF_FIRST)
        if not firsts:
            break
        members.extend(sorted(firsts, key=_key))
        rest = graph.objects(node, RDF_REST)
        node = next(iter(rest)) if rest else RDF_NIL
    return members


def cq6_body_values(d: Dataset, prop: Iri) -> List[Term]:
    """Values of `prop` inside RDF message bodies, flattening RDF
    collections into their members (list order preserved)."""
    g = d.default_graph
    out = []
    graph_names = []
    for t in g.match(None, vocab.BODY, None):
        for gname in g.objects(t.object, vocab.ABOUT):
            graph_names.append(gname)
    for gname in sorted(graph_names, key=_key):
        body = d.graph(gname)
        for t in sorted(body.match(None, prop, None),
                        key=lambda t: _key(t.subject)):
            out.extend(_flatten(body, t.object))
    return out


def cq7_query_param(d: Dataset, name: str) -> List[Term]:
    """Values of the query parameter called `name` on request URIs."""
    g = d.default_graph
    out = []
    for t in g.match(None, vocab.URI_PROP, None):
        for p in g.objects(t.object, vocab.QUERY_PARAMS):
            if Literal(name) in g.objects(p, vocab.PARAM_NAME):
                out.extend(g.objects(p, vocab.PARAM_VALUE))
    return sorted(out, key=_key)
