"""
Option validation for the lab commands.

Command-line values arrive as strings; each action cleans them through a
form and an invalid form becomes a ParameterError carrying the form errors.
"""
from django import forms
from django.core.exceptions import ValidationError

from counting.counts import CountMethod
from expsums.sums import Method
from monomials.exact import as_fraction

from .exceptions import ParameterError

COUNT_METHODS = {"mitm": CountMethod.MEET_IN_MIDDLE, "brute": CountMethod.BRUTE_FORCE}


class RationalField(forms.Field):
    """An exact rational given as "a/b" or an integer; decimals are rejected."""

    default_error_messages = {"invalid": "Enter an exact rational such as 91/100 or 20, got %(value)s."}

    def to_python(self, value):
        if value in self.empty_values:
            return None
        try:
            return as_fraction(value)
        except ParameterError:
            raise ValidationError(self.error_messages["invalid"], code="invalid", params={"value": value})


class _ListField(forms.Field):
    separator = ","

    def __init__(self, *, length=None, **kwargs):
        self.length = length
        super().__init__(**kwargs)

    def parse_item(self, text):
        raise NotImplementedError

    def to_python(self, value):
        if value in self.empty_values:
            return None
        items = value if isinstance(value, (list, tuple)) else str(value).split(self.separator)
        try:
            parsed = [self.parse_item(item) for item in items]
        except (ValueError, ParameterError):
            raise ValidationError(f"Could not parse {value!r}.", code="invalid")
        if self.length is not None and len(parsed) != self.length:
            raise ValidationError(f"Expected {self.length} values, got {len(parsed)}.", code="length")
        return parsed


class IntegerListField(_ListField):
    """"2,4,6,8" → [2, 4, 6, 8]."""

    def __init__(self, *, min_value=None, **kwargs):
        self.min_value = min_value
        super().__init__(**kwargs)

    def parse_item(self, text):
        value = int(text)
        if self.min_value is not None and value < self.min_value:
            raise ValueError(value)
        return value


class RationalListField(_ListField):
    def parse_item(self, text):
        return as_fraction(text.strip() if isinstance(text, str) else text)


class SquaresField(_ListField):
    """"0,0;1,2" → [(0, 0), (1, 2)]."""

    separator = ";"

    def parse_item(self, text):
        i, j = (int(x) for x in str(text).split(","))
        return i, j


class IntegerRangeField(forms.Field):
    """"2:6" → [2, 3, 4, 5, 6]."""

    def to_python(self, value):
        if value in self.empty_values:
            return None
        try:
            lo, hi = (int(x) for x in str(value).split(":"))
        except ValueError:
            raise ValidationError(f"Expected lo:hi, got {value!r}.", code="invalid")
        if not 1 <= lo <= hi:
            raise ValidationError(f"Expected 1 ≤ lo ≤ hi, got {value!r}.", code="invalid")
        return list(range(lo, hi + 1))


class GridField(IntegerListField):
    """"auto" for the adequate grid, or sizes "m1,m2,..."."""

    def __init__(self, **kwargs):
        super().__init__(min_value=1, **kwargs)

    def to_python(self, value):
        if value in self.empty_values or value == "auto":
            return None
        return tuple(super().to_python(value))


def clean_options(form_class, options):
    form = form_class(data={name: options.get(name) for name in form_class.base_fields})
    if not form.is_valid():
        messages = [f"{name}: {' '.join(errors)}" for name, errors in form.errors.items()]
        raise ParameterError("; ".join(messages))
    return form.cleaned_data


# ═══════════════════════════════════════════════════════════════════════════════
# count
# ═══════════════════════════════════════════════════════════════════════════════

class CountForm(forms.Form):
    d = forms.IntegerField(min_value=1)
    k = forms.IntegerField(min_value=1)
    s = forms.IntegerField(min_value=1)
    N = forms.IntegerField(min_value=1, required=False)
    N_range = IntegerRangeField(required=False)
    method = forms.ChoiceField(choices=[(key, value.label) for key, value in COUNT_METHODS.items()])
    split = forms.IntegerField(min_value=1, required=False)
    linear = forms.BooleanField(required=False)
    bounds = forms.BooleanField(required=False)

    def clean(self):
        cleaned = super().clean()
        if cleaned.get("N") is None and not cleaned.get("N_range"):
            raise ValidationError("Give --N or --N-range.")
        return cleaned


# ═══════════════════════════════════════════════════════════════════════════════
# sums
# ═══════════════════════════════════════════════════════════════════════════════

class MomentForm(forms.Form):
    d = forms.IntegerField(min_value=1)
    k = forms.IntegerField(min_value=1)
    N = forms.IntegerField(min_value=1)
    p = forms.IntegerField(min_value=2)
    grid = GridField(required=False)
    method = forms.ChoiceField(choices=Method.choices)


class ProbeForm(forms.Form):
    N = forms.IntegerField(min_value=1)
    c = RationalField()
    samples = forms.IntegerField(min_value=1)
    q = RationalListField(required=False)


class EvalForm(forms.Form):
    d = forms.IntegerField(min_value=1)
    k = forms.IntegerField(min_value=1)
    N = forms.IntegerField(min_value=1)
    x = RationalListField()


# ═══════════════════════════════════════════════════════════════════════════════
# numerology
# ═══════════════════════════════════════════════════════════════════════════════

class EtaForm(forms.Form):
    p = RationalField()
    r = forms.IntegerField(min_value=1)
    M = forms.IntegerField(min_value=1)
    u = RationalField()
    mu = RationalField()
    eta_p = RationalField()


class ScanForm(forms.Form):
    eta_p = RationalField()
    p_window = RationalListField(length=2)
    r_max = forms.IntegerField(min_value=1)
    M_max = forms.IntegerField(min_value=1)
    mu = RationalField()
    u = RationalField()
    depth = forms.IntegerField(min_value=1)


class InflationForm(forms.Form):
    l = forms.IntegerField(min_value=1, max_value=2)
    n = forms.IntegerField(min_value=1)
    p = RationalField()


class ConvergenceForm(forms.Form):
    p = RationalField()
    r_max = forms.IntegerField(min_value=1)


# ═══════════════════════════════════════════════════════════════════════════════
# transversality
# ═══════════════════════════════════════════════════════════════════════════════

class ConjectureForm(forms.Form):
    l = forms.IntegerField(min_value=1, max_value=2)
    dims = IntegerListField(min_value=1)
    trials = forms.IntegerField(min_value=1)


class AppendixForm(forms.Form):
    trials = forms.IntegerField(min_value=1)


class BrascampLiebForm(forms.Form):
    l = forms.IntegerField(min_value=1, max_value=2)
    samples = forms.IntegerField(min_value=0)
    points = forms.CharField(required=False)
    random_points = forms.IntegerField(min_value=1, required=False)
    squares = SquaresField(required=False)
    K = forms.IntegerField(min_value=1, required=False)

    def clean(self):
        cleaned = super().clean()
        sources = [name for name in ("points", "random_points", "squares") if cleaned.get(name)]
        if len(sources) != 1:
            raise ValidationError("Give exactly one of --points, --random-points or --squares.")
        if cleaned.get("squares") and not cleaned.get("K"):
            raise ValidationError("--squares needs --K.")
        return cleaned


class SquaresForm(forms.Form):
    K = forms.IntegerField(min_value=1)
    degree = forms.IntegerField(min_value=1)
    squares = SquaresField(required=False)
    poly_samples = forms.IntegerField(min_value=1)
    point_samples = forms.IntegerField(min_value=2)


class MinorOrderForm(forms.Form):
    dim = forms.IntegerField(min_value=1)
    l = forms.IntegerField(min_value=1, max_value=2)
    d = forms.IntegerField(min_value=1)
    k = forms.IntegerField(min_value=2)


# ═══════════════════════════════════════════════════════════════════════════════
# report
# ═══════════════════════════════════════════════════════════════════════════════

class ArchiveForm(forms.Form):
    last = forms.IntegerField(min_value=1)
    id = forms.UUIDField(required=False)
