import copy
import math

import pytest

from congap.certifier import (Certificate, Irreducibility, MalformedCertificate, NoCertificate,
                              ReducibleInputError,
                              certify_cyclotomic, check_irreducible_heuristic,
                              semi_split_primes, verify_certificate)
from congap.polycore import parse_poly
from congap.unitgroup import subgroup_closure
from congap.witness import split_primes

from oracles import is_irreducible_brute, naive_sieve, roots_mod

PHI5 = "x^4 + x^3 + x^2 + x + 1"


@pytest.mark.parametrize("text, bound, expected", [
    ("x^2 + 1", 30, [5, 13, 17, 29]),
    ("x^3 - 2", 20, [5, 11, 17]),
    ("x - 5", 10, [2, 3, 5, 7]),
])
def test_semi_split_examples(text, bound, expected):
    assert semi_split_primes(parse_poly(text), bound) == expected


DISCS = {"x^2 + 1": -4, "x^3 - 2": -108, PHI5: 125, "x^5 - x - 1": 2869, "x^4 - 2": -2048}


@pytest.mark.parametrize("text", list(DISCS))
def test_semi_split_against_brute_force(text):
    g = parse_poly(text)
    semi = semi_split_primes(g, 3000)
    assert semi == [p for p in naive_sieve(3000)
                    if DISCS[text] % p and roots_mod(list(g.coeffs), p)]
    assert set(split_primes(g, 3000).primes) <= set(semi)


def test_semi_split_quadratic_equals_split():
    g = parse_poly("x^2 + 1")
    assert semi_split_primes(g, 10 ** 4) == list(split_primes(g, 10 ** 4).primes)


@pytest.mark.parametrize("text, verdict", [
    ("x^2 + 1", Irreducibility.DEFINITELY_IRREDUCIBLE),
    ("x^2 - 1", Irreducibility.DEFINITELY_REDUCIBLE),
    ("x^4 + 1", Irreducibility.UNKNOWN),
    ("x^3 - 2", Irreducibility.DEFINITELY_IRREDUCIBLE),
    ("x^3 + x", Irreducibility.DEFINITELY_REDUCIBLE),
    ("x^4 + 2*x^2 + 1", Irreducibility.DEFINITELY_REDUCIBLE),
    ("x + 3", Irreducibility.DEFINITELY_IRREDUCIBLE),
])
def test_irreducibility_heuristic(text, verdict):
    assert check_irreducible_heuristic(parse_poly(text)) is verdict


def test_x4_plus_1_reducible_mod_every_small_prime():
    assert not any(is_irreducible_brute([1, 0, 0, 0, 1], p) for p in naive_sieve(30))


def test_certify_gaussian_field_phi5():
    cert = certify_cyclotomic(parse_poly("x^2 + 1"), 5, 100)
    assert isinstance(cert, Certificate)
    assert cert.assignments == ((2, 17),)
    # 2 divides disc, 7 has no root
    assert roots_mod([1, 0, 1], 7) == [] and roots_mod([1, 0, 1], 17) == [4, 13]


def test_certify_cyclotomic_field_phi3():
    cert = certify_cyclotomic(parse_poly(PHI5), 3, 100)
    assert isinstance(cert, Certificate)
    assert cert.assignments == ((2, 11),)
    assert cert.disc_g == 125


def test_certify_inconclusive_phi4_over_gaussian():
    res = certify_cyclotomic(parse_poly("x^2 + 1"), 4, 10 ** 4)
    assert isinstance(res, NoCertificate)
    assert [s.cls for s in res.exhausted] == [3]
    assert res.exhausted[0].primes_tried == sum(1 for p in naive_sieve(10 ** 4) if p % 4 == 3)
    assert res.hints


def test_certify_classical_example_many_moduli():
    # Q(zeta_m) with gcd(m, n) = 1 always certifies
    cyclo = {5: PHI5, 7: "x^6 + x^5 + x^4 + x^3 + x^2 + x + 1", 3: "x^2 + x + 1"}
    for m, text in cyclo.items():
        for n in range(3, 25):
            if math.gcd(m, n) != 1:
                continue
            cert = certify_cyclotomic(parse_poly(text), n, 10 ** 5)
            assert isinstance(cert, Certificate), (m, n)
            assert verify_certificate(cert.to_dict()) == []
            assert all(p % m == 1 for _, p in cert.assignments)


def test_certify_coset_hint():
    # Phi_8 over Q(i): class 7 has no semi-split prime and neither does 7*5 = 3
    res = certify_cyclotomic(parse_poly("x^2 + 1"), 8, 1000)
    assert isinstance(res, NoCertificate)
    assert res.found == ((5, 5),)
    assert len(res.hints) == 1


def test_certify_errors():
    with pytest.raises(ValueError):
        certify_cyclotomic(parse_poly("x^2 + 1"), 2, 100)
    with pytest.raises(ValueError):
        certify_cyclotomic(parse_poly("2*x^2 + 1"), 5, 100)
    with pytest.raises(ReducibleInputError):
        certify_cyclotomic(parse_poly("x^2 - 1"), 5, 100)
    with pytest.raises(ReducibleInputError):
        certify_cyclotomic(parse_poly("x^4 + 1"), 3, 100)
    # x^4 + 1 = Phi_8 is irreducible, so the flag is honest here
    cert = certify_cyclotomic(parse_poly("x^4 + 1"), 3, 100, assume_irreducible=True)
    assert isinstance(cert, Certificate)


def test_certificate_classes_generate():
    for n in (5, 7, 8, 9, 12, 15, 16, 21, 24):
        cert = certify_cyclotomic(parse_poly("x^3 - 2"), n, 10 ** 5)
        if isinstance(cert, Certificate):
            classes = [a for a, _ in cert.assignments]
            assert not subgroup_closure(n, classes).is_proper


def _cert_dict(text="x^2 + 1", n=5, bound=100):
    return certify_cyclotomic(parse_poly(text), n, bound).to_dict()


def test_verify_accepts():
    assert verify_certificate(_cert_dict()) == []
    assert verify_certificate(_cert_dict(PHI5, 3)) == []


TAMPERS = [
    ("g", lambda d: d.update(g="x^2 + 2")),
    ("n", lambda d: d.update(n=7)),
    ("disc_g", lambda d: d.update(disc_g="-5")),
    ("class", lambda d: d["assignments"][0].update({"class": 3})),
    ("prime", lambda d: d["assignments"][0].update(prime=13)),
    ("prime_larger", lambda d: d["assignments"][0].update(prime=37)),
    ("prime_composite", lambda d: d["assignments"][0].update(prime=27)),
    ("prime_bound", lambda d: d.update(prime_bound=10)),
    ("assignments_dropped", lambda d: d.update(assignments=[])),
]


@pytest.mark.parametrize("name, tamper", TAMPERS, ids=[t[0] for t in TAMPERS])
@pytest.mark.parametrize("source", [("x^2 + 1", 5), (PHI5, 3)])
def test_verify_rejects_single_field_tamper(name, tamper, source):
    data = _cert_dict(*source)
    bad = copy.deepcopy(data)
    tamper(bad)
    if bad == data:
        pytest.skip("tamper is a no-op for this certificate")
    assert verify_certificate(bad) != []


def test_verify_malformed():
    data = _cert_dict()
    del data["n"]
    with pytest.raises(MalformedCertificate):
        verify_certificate(data)
    with pytest.raises(MalformedCertificate):
        verify_certificate(["not", "a", "dict"])
