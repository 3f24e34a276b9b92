"""Exception hierarchy.

Every error carries a short machine-readable ``code`` that the command line
front end reports verbatim.
"""


class RelKspError(Exception):
    code = "Error"

    def __init__(self, message=""):
        super().__init__(message or self.code)


def _make(name, doc):
    return type(name, (RelKspError,), {"code": name, "__doc__": doc})


DescriptorMismatch = _make("DescriptorMismatch", "Operands live in different rings.")
NotAUnit = _make("NotAUnit", "Element has no multiplicative inverse.")
NotDivisible = _make("NotDivisible", "Exact division has a nonzero remainder.")
NotADomain = _make("NotADomain", "Operation requires an integral domain.")
NotEuclidean = _make("NotEuclidean", "Operation requires a Euclidean ring.")
CertificateRequired = _make("CertificateRequired", "Membership is only checkable with a certificate.")
NotEnumerable = _make("NotEnumerable", "Unit group cannot be enumerated.")
NotSquare = _make("NotSquare", "Matrix is not square.")
NotAlternating = _make("NotAlternating", "Matrix is not alternating.")
OddSize = _make("OddSize", "Matrix has odd size.")
SizeMismatch = _make("SizeMismatch", "Dimensions do not fit.")
BadIndex = _make("BadIndex", "Generator indices out of range or equal.")
NotInvertible = _make("NotInvertible", "Matrix is not invertible.")
NotUnimodular = _make("NotUnimodular", "Row is not unimodular.")
NeedsDimensionThree = _make("NeedsDimensionThree", "Reduction needs at least three coordinates.")
NotRelative = _make("NotRelative", "Data is not congruent to the identity modulo the ideal.")
NotSpecial = _make("NotSpecial", "Matrix fails the SL/Sp defining identity.")
NotIsotropicPair = _make("NotIsotropicPair", "Vectors u, v do not satisfy <u,v> = 0.")
QuotientNotComputable = _make("QuotientNotComputable", "R/I is not computable for this ring.")
WitnessNotFound = _make("WitnessNotFound", "No witness found within the search bounds.")
PfaffianNotUnit = _make("PfaffianNotUnit", "Pfaffian is not a unit congruent to 1.")
NotInKernelC = _make("NotInKernelC", "Unit is not congruent to 1 modulo the ideal.")
ExhaustedBudget = _make("ExhaustedBudget", "Search budget exhausted; result unknown.")
CertificateInvalid = _make("CertificateInvalid", "Certificate does not verify.")
HypothesisFailed = _make("HypothesisFailed", "A precondition identity does not hold.")
NotComaximal = _make("NotComaximal", "Localization elements are not comaximal.")
Incompatible = _make("Incompatible", "Local data disagree on the overlap.")
UnknownBinding = _make("UnknownBinding", "Name is not bound in the document.")


class DocumentSyntaxError(RelKspError):
    code = "SyntaxError"

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"{message}{where}")


class DocumentTypeError(DocumentSyntaxError):
    code = "TypeError"
