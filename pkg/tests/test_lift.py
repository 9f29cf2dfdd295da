"""Lifting HTTP messages into RDF datasets."""

import os

from httplift.ingest import load_transcript, parse_http_request, \
    parse_http_response
from httplift.lift import (
    lift_interaction, lift_conversation, lift_uri, uri_node,
    vocabulary_scan, DEFAULT_URI_NODE_BASE,
)
from httplift.model import Interaction, Method, Request, Response
from httplift.rdf import (
    Iri, BlankNode, Literal, Triple, Graph, isomorphic_datasets,
    RDF_TYPE, XSD_INTEGER,
)
from httplift.turtle import parse_trig
from httplift.uri import parse_uri
from httplift import vocab

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture(name):
    with open(os.path.join(FIXTURES, name)) as f:
        return f.read()


def lift_fixture(name="registration.http", base=None):
    return lift_conversation(load_transcript(fixture(name)), base=base)


class TestUriNodes:
    def test_deterministic_iri(self):
        u = parse_uri("http://example.org:8080/reg?count=5")
        node = uri_node(u)
        assert node == Iri(DEFAULT_URI_NODE_BASE +
                           "http%3A%2F%2Fexample.org%3A8080%2Freg%3Fcount%3D5")

    def test_lift_uri_components(self):
        node, triples = lift_uri(parse_uri("http://h:1/p?a=1#f"))
        g = Graph(triples)
        val = lambda p: g.value(node, p)
        assert val(RDF_TYPE) == vocab.URI
        assert val(vocab.SCHEME) == Literal("http")
        assert val(vocab.AUTHORITY) == Literal("h:1")
        assert val(vocab.PATH) == Literal("/p")
        assert val(vocab.QUERY) == Literal("a=1")
        assert val(vocab.FRAGMENT) == Literal("f")
        assert val(vocab.ID_RES) == Literal("http://h:1/p")

    def test_absent_query_and_fragment_not_asserted(self):
        node, triples = lift_uri(parse_uri("http://h/p"))
        g = Graph(triples)
        assert g.value(node, vocab.QUERY) is None
        assert g.value(node, vocab.FRAGMENT) is None

    def test_query_params_lifted(self):
        node, triples = lift_uri(parse_uri("http://h/p?a=1&b=2"))
        g = Graph(triples)
        params = g.objects(node, vocab.QUERY_PARAMS)
        assert len(params) == 2
        names = {g.value(p, vocab.PARAM_NAME) for p in params}
        assert names == {Literal("a"), Literal("b")}


class TestConversationLift:
    def test_matches_golden(self):
        lifted = lift_fixture()
        golden = parse_trig(fixture("registration_golden.trig"))
        assert isomorphic_datasets(lifted, golden)

    def test_uri_nodes_unify_across_interactions(self):
        d = lift_fixture()
        g = d.default_graph
        target = uri_node(parse_uri("http://example.org:8080/reg/x8344"))
        # the Location target of interaction 1 ...
        assert g.subjects(vocab.LOCATION, target)
        # ... is the very node interaction 2's request points at
        assert g.subjects(vocab.URI_PROP, target)

    def test_location_chain_materialised(self):
        d = lift_fixture()
        g = d.default_graph
        (header,) = g.subjects(RDF_TYPE, vocab.LOCATION_HEADER)
        assert g.value(header, vocab.IS_LOCATION_HEADER) == header
        linked = g.value(header, vocab.LINK)
        (resp,) = g.subjects(vocab.HDR, header)
        assert g.value(resp, vocab.LOCATION) == linked

    def test_standard_individuals_carry_their_facts(self):
        g = lift_fixture().default_graph
        post = vocab.method_iri("POST")
        assert g.value(post, vocab.METHOD_NAME) == Literal("POST")
        created = vocab.status_iri("Created")
        assert g.value(created, vocab.STATUS_CODE_NUMBER) == \
            Literal("201", datatype=XSD_INTEGER)

    def test_content_type_and_accept_extensions(self):
        g = lift_fixture().default_graph
        (resp2,) = g.subjects(vocab.SC_PROP, vocab.status_iri("OK"))
        assert g.value(resp2, vocab.CONTENT_TYPE) == Literal("text/turtle")
        accepts = g.subjects(RDF_TYPE, vocab.ACCEPT_HEADER)
        assert len(accepts) == 1

    def test_body_named_graph(self):
        d = lift_fixture()
        (name,) = list(d.named_graphs)
        body_graph = d.graph(name)
        ex = Iri("http://example.org/ns#x8344")
        assert body_graph.value(ex, Iri("http://example.org/ns#ids")) is not None
        # the content node links to the graph name
        (content,) = d.default_graph.subjects(vocab.ABOUT, name)
        assert Triple(content, RDF_TYPE, vocab.CONTENT_AS_RDF) \
            in d.default_graph

    def test_vocabulary_scan_clean(self):
        assert vocabulary_scan(lift_fixture()) == set()

    def test_vocabulary_scan_flags_foreign_terms(self):
        d = lift_fixture()
        alien = Iri("http://example.org/alien")
        g = d.default_graph.insert(
            Triple(BlankNode("z"), alien, Literal("x")))
        g = g.insert(Triple(BlankNode("z"), RDF_TYPE, alien))
        from httplift.rdf import Dataset
        assert vocabulary_scan(Dataset(g, dict(d.named_graphs))) == {alien}


class TestMessageLift:
    def test_base_mints_message_iris(self):
        d = lift_fixture(base="http://log.example/c1/")
        g = d.default_graph
        reqs = g.subjects(RDF_TYPE, vocab.REQUEST)
        assert reqs == {Iri("http://log.example/c1/req1"),
                        Iri("http://log.example/c1/req3")}

    def test_default_messages_are_blank(self):
        g = lift_fixture().default_graph
        for req in g.subjects(RDF_TYPE, vocab.REQUEST):
            assert isinstance(req, BlankNode)

    def test_interim_response_typing(self):
        req = parse_http_request("GET /p HTTP/1.1\nHost: h\n\n")
        interim = parse_http_response("HTTP/1.1 100 Continue\n\n")
        final = parse_http_response("HTTP/1.1 200 OK\n\n")
        d = lift_interaction(Interaction(req, (interim,), final))
        g = d.default_graph
        (i_node,) = g.subjects(RDF_TYPE, vocab.INTERIM_RESPONSE)
        (f_node,) = g.subjects(RDF_TYPE, vocab.FINAL_RESPONSE)
        assert i_node != f_node
        (q,) = g.subjects(RDF_TYPE, vocab.REQUEST)
        assert g.objects(q, vocab.RESP) == {i_node, f_node}

    def test_nonstandard_method_gets_fresh_node(self):
        req = Request(method=Method("FROBNICATE"),
                      uri=parse_uri("http://h/p"))
        d = lift_interaction(Interaction(req))
        g = d.default_graph
        (q,) = g.subjects(RDF_TYPE, vocab.REQUEST)
        m = g.value(q, vocab.MTHD_PROP)
        assert isinstance(m, BlankNode)
        assert g.value(m, vocab.METHOD_NAME) == Literal("FROBNICATE")

    def test_nonstandard_status_gets_fresh_node(self):
        req = parse_http_request("GET /p HTTP/1.1\nHost: h\n\n")
        d = lift_interaction(Interaction(req, (), Response(status_code=299)))
        g = d.default_graph
        (r,) = g.subjects(RDF_TYPE, vocab.FINAL_RESPONSE)
        sc = g.value(r, vocab.SC_PROP)
        assert isinstance(sc, BlankNode)
        assert g.value(sc, vocab.STATUS_CODE_NUMBER) == \
            Literal("299", datatype=XSD_INTEGER)

    def test_trig_body_blank_labels_stay_disjoint(self):
        # a body graph using labels the lifter also mints must not collide
        body = "@prefix ex: <http://example.org/> . _:b1 ex:p _:b2 .\n"
        text = ("GET /p HTTP/1.1\nHost: h\n"
                "---\n"
                "HTTP/1.1 200 OK\nContent-Type: text/turtle\n"
                "Content-Length: %d\n\n%s" % (len(body), body))
        d = lift_conversation(load_transcript(text))
        (name,) = list(d.named_graphs)
        (t,) = list(d.graph(name))
        assert t.subject not in {s for tr in d.default_graph
                                 for s in (tr.subject, tr.object)}
