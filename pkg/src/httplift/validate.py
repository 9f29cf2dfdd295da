"""Closed-world conformance rules over lifted datasets.

Rules check the absence of required facts, which open-world OWL reasoning
cannot express; every problem is reported as a finding, never an exception.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from . import vocab
from .model import STATUS_CODES, is_token
from .rdf import RDF_TYPE, Dataset, Iri, Literal, Term
from .turtle import format_term

VIOLATION = "violation"
WARNING = "warning"


@dataclass(frozen=True)
class Finding:
    rule_id: str
    severity: str
    focus: Term
    message: str


@dataclass(frozen=True)
class ValidationReport:
    findings: Tuple[Finding, ...]
    checked_rules: Tuple[str, ...]

    @property
    def violations(self) -> Tuple[Finding, ...]:
        return tuple(f for f in self.findings if f.severity == VIOLATION)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_text(self) -> str:
        if not self.findings:
            return "OK: %d rules checked, no findings\n" % len(self.checked_rules)
        lines = ["%s [%s] %s: %s" % (f.severity.upper(), f.rule_id,
                                     format_term(f.focus, vocab.PREFIXES),
                                     f.message)
                 for f in self.findings]
        return "\n".join(lines) + "\n"

    def to_tsv(self) -> str:
        lines = ["%s\t%s\t%s\t%s" % (f.rule_id, f.severity,
                                     format_term(f.focus, vocab.PREFIXES),
                                     f.message)
                 for f in self.findings]
        return "\n".join(lines) + ("\n" if lines else "")


_RULES = {
    "R1": "Functional properties (mthd, uri, sc, body, link, "
          "statusCodeNumber) admit at most one value per node.",
    "R2": "Every request must have a method and an effective URI.",
    "R3": "Every response must have a status instance carrying a status "
          "code number.",
    "R4": "Status code numbers outside the five defined classes "
          "[100, 599] are flagged; a standard status individual must "
          "carry its registered number.",
    "R5": "A request may have many interim responses but only one final "
          "response.",
    "R6": "A message with a body must declare a content type.",
    "R7": "Responses to HEAD requests must not have a body.",
    "R8": "The response media type should match one of the media ranges "
          "of the request's Accept header (substring containment either "
          "way; */* matches anything).",
    "R9": "A method name must be a non-empty token without separators.",
    "R10": "A Location header value must be liftable to a URI.",
}

RULE_IDS = tuple(sorted(_RULES, key=lambda r: int(r[1:])))

_FUNCTIONAL = (vocab.MTHD_PROP, vocab.URI_PROP, vocab.SC_PROP, vocab.BODY,
               vocab.LINK, vocab.STATUS_CODE_NUMBER)


def explain(rule_id: str) -> str:
    if rule_id not in _RULES:
        raise KeyError("unknown rule id: %r" % rule_id)
    return "%s: %s" % (rule_id, _RULES[rule_id])


def _int_value(term: Term) -> Optional[int]:
    if isinstance(term, Literal):
        try:
            return int(term.lexical)
        except ValueError:
            return None
    return None


def _media_match(content_type: str, media_range: str) -> bool:
    if media_range.strip() == "*/*":
        return True
    ct = content_type.strip()
    mr = media_range.strip()
    return ct in mr or mr in ct


def validate(dataset: Dataset) -> ValidationReport:
    """Evaluate the full rule registry over a lifted dataset. Deterministic:
    findings are ordered by rule, focus node and message."""
    g = dataset.default_graph
    findings: List[Finding] = []

    def report(rule_id: str, severity: str, focus: Term, message: str):
        findings.append(Finding(rule_id, severity, focus, message))

    # R1 functional properties.
    for prop in _FUNCTIONAL:
        per_subject = {}
        for t in g.match(None, prop, None):
            per_subject.setdefault(t.subject, set()).add(t.object)
        for subject, values in per_subject.items():
            if len(values) > 1:
                report("R1", VIOLATION, subject,
                       "%d values for functional property %s"
                       % (len(values), format_term(prop, vocab.PREFIXES)))

    # R2 request completeness.
    for q in g.subjects(RDF_TYPE, vocab.REQUEST):
        if not g.objects(q, vocab.MTHD_PROP):
            report("R2", VIOLATION, q, "request has no method")
        if not g.objects(q, vocab.URI_PROP):
            report("R2", VIOLATION, q, "request has no effective URI")

    # R3 response completeness.
    for r in g.subjects(RDF_TYPE, vocab.RESPONSE):
        statuses = g.objects(r, vocab.SC_PROP)
        if not statuses:
            report("R3", VIOLATION, r, "response has no status instance")
        for s in statuses:
            if not g.objects(s, vocab.STATUS_CODE_NUMBER):
                report("R3", VIOLATION, s,
                       "status instance has no status code number")

    # R4 code/class sanity.
    for t in g.match(None, vocab.STATUS_CODE_NUMBER, None):
        code = _int_value(t.object)
        if code is None:
            report("R4", VIOLATION, t.subject,
                   "status code number is not an integer: %s"
                   % format_term(t.object, vocab.PREFIXES))
            continue
        expected = None
        if isinstance(t.subject, Iri) and t.subject.value.startswith(vocab.SC):
            expected = STATUS_CODES.get(t.subject.value[len(vocab.SC):])
        if expected is not None:
            if code != expected:
                report("R4", VIOLATION, t.subject,
                       "standard status individual carries %d, expected %d"
                       % (code, expected))
        elif not (100 <= code <= 599):
            report("R4", WARNING, t.subject,
                   "status code %d belongs to no status class" % code)

    # R5 single final response.
    for q in {t.subject for t in g.match(None, vocab.RESP, None)}:
        finals = [r for r in g.objects(q, vocab.RESP)
                  if vocab.INTERIM_RESPONSE not in g.objects(r, RDF_TYPE)]
        if len(finals) > 1:
            report("R5", VIOLATION, q,
                   "request has %d non-interim responses" % len(finals))

    # R6 content type declared in the presence of a body.
    for t in g.match(None, vocab.BODY, None):
        if not g.objects(t.subject, vocab.CONTENT_TYPE):
            report("R6", VIOLATION, t.subject,
                   "message has a body but no declared content type")

    # R7 HEAD responses without a body.
    head = vocab.method_iri("HEAD")
    for t in g.match(None, vocab.RESP, None):
        if head in g.objects(t.subject, vocab.MTHD_PROP) \
                and g.objects(t.object, vocab.BODY):
            report("R7", VIOLATION, t.object,
                   "response to a HEAD request has a body")

    # R8 content negotiation.
    for t in g.match(None, vocab.RESP, None):
        ranges = {o.lexical
                  for a in g.objects(t.subject, vocab.ACCEPT)
                  for o in g.objects(a, vocab.MEDIA_TYPE)
                  if isinstance(o, Literal)}
        if not ranges:
            continue
        for ct in g.objects(t.object, vocab.CONTENT_TYPE):
            if not isinstance(ct, Literal):
                continue
            if not any(_media_match(ct.lexical, mr) for mr in ranges):
                report("R8", WARNING, t.object,
                       "content type %r matches no accepted media range"
                       % ct.lexical)

    # R9 method token.
    for t in g.match(None, vocab.METHOD_NAME, None):
        if not isinstance(t.object, Literal) or not is_token(t.object.lexical):
            report("R9", VIOLATION, t.subject,
                   "method name is not a valid token: %s"
                   % format_term(t.object, vocab.PREFIXES))

    # R10 Location header lifted to a URI.
    for t in g.match(None, vocab.HDR_NAME, None):
        if isinstance(t.object, Literal) \
                and t.object.lexical.lower() == "location" \
                and not g.objects(t.subject, vocab.LINK):
            report("R10", VIOLATION, t.subject,
                   "Location header value could not be lifted to a URI")

    findings.sort(key=lambda f: (int(f.rule_id[1:]),
                                 format_term(f.focus, vocab.PREFIXES),
                                 f.message))
    return ValidationReport(tuple(findings), RULE_IDS)
