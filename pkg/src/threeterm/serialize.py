"""JSON documents for fields, polynomials, standard forms and traces.

Field:       {"model": "mixed"|"equal", "p": 3, "d": 2, "modulus": "g^2+1", "precision": 12}
Polynomial:  {"field": <field or path>, "degree": n, "terms": {"<h>": "<K literal for c_h>"}}
             with an optional "precision": {"<h>": prec} for coefficients known
             to less than the field precision.  Absent terms are exactly zero.
"""

import json
import os
from importlib import resources

from .eisenstein import EisensteinPoly
from .errors import BadSpec
from .local_field import k_make
from .reduce import StandardForm


def dumps(doc):
    """Canonical JSON text (sorted keys) so equal documents are byte-identical."""
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def read_json(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def field_from_json(doc, base_dir=None):
    if isinstance(doc, str):
        path = doc if base_dir is None or os.path.isabs(doc) else os.path.join(base_dir, doc)
        doc = read_json(path)
    if not isinstance(doc, dict):
        raise BadSpec("field description must be a JSON object")
    return k_make(doc)


def load_field(path):
    return field_from_json(read_json(path))


def field_to_json(K):
    return K.spec()


def poly_to_json(f, inline_field=True):
    K = f.field
    doc = {
        "field": field_to_json(K) if inline_field else None,
        "degree": f.n,
        "terms": {str(h): c.literal() for h, c in sorted(f.coeffs.items())},
    }
    low = {str(h): c.prec for h, c in sorted(f.coeffs.items()) if c.prec < K.N}
    if low:
        doc["precision"] = low
    return doc


def poly_from_json(doc, field=None, base_dir=None):
    """Polynomial from its JSON document; ``field`` overrides the embedded one."""
    try:
        K = field if field is not None else field_from_json(doc["field"], base_dir)
        n = int(doc["degree"])
        terms = doc.get("terms", {})
        precs = doc.get("precision", {})
    except (KeyError, TypeError, ValueError) as exc:
        raise BadSpec(f"malformed polynomial document: {exc}") from exc
    coeffs = {}
    for h, text in terms.items():
        prec = int(precs[h]) if h in precs else None
        try:
            coeffs[int(h)] = K.parse(str(text), prec)
        except ValueError as exc:
            raise BadSpec(f"bad literal for c_{h}: {exc}") from exc
    return EisensteinPoly(K, n, coeffs)


def load_poly(path, field=None):
    return poly_from_json(read_json(path), field, os.path.dirname(os.path.abspath(path)))


def standard_form_from_json(doc, field=None, base_dir=None):
    K = field if field is not None else field_from_json(doc["field"], base_dir)
    return StandardForm.from_json(K, doc)


def standard_form_to_json(sf, with_field=False):
    doc = sf.to_json()
    if with_field:
        doc["field"] = field_to_json(sf.field)
    return doc


# --- packaged fixtures ---------------------------------------------------------------

FIXTURES = ("Q3z8", "F3t", "Q3", "two_index_deg9", "three_index_deg9", "deg6_char3", "three_index_q3")


def fixture_path(name):
    return str(resources.files("threeterm") / "data" / f"{name}.json")


def fixture(name):
    """Field or polynomial stored with the package (see FIXTURES)."""
    doc = read_json(fixture_path(name))
    if "degree" in doc:
        return poly_from_json(doc, base_dir=os.path.dirname(fixture_path(name)))
    return field_from_json(doc)
