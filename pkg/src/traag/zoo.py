"""Named mixed graphs: the standard small examples and forbidden patterns."""

from traag.graph import graph

P2 = graph(": a-b")
XI2 = graph(": a>b")  # Klein bottle group
P4 = graph(": a-b b-c c-d")
C4 = graph(": a-b b-c c-d d-a")
LAMBDA_S = graph(": a1>b a2>b")

GAMMA1 = graph(": a>b c>b d-b d>a")
GAMMA2 = graph(": a'>b' c'>b' d'-a' d'>b'")
GAMMA3 = graph(": b1>a1 b1>a2 b2-b1 b2>a1 b2>a2")
GAMMA3_PRIME = graph(": b1>a1 b1-a2' b2-b1 b2>a1 b2-a2'")
GAMMA4 = graph(": a1'>b' a2'>b' a3'-a1' a3'>b' a3'-a2'")

LAMBDA1 = graph(": b>a1 b>a2")
LAMBDA2 = graph(": b'>a1' b'-a2'")

UPSILON = graph(
    ": b1>a1 b2-a2 c1>a1 c1-a2 c1-b1 c1-b2 c2-a2 c2-b2 c2-b1 c2-c1 c2>a1"
)

# Seven three-vertex graphs whose absence characterises special graphs.
SPECIAL_OBSTRUCTIONS = (
    graph(": x>z z>y y>x"),
    graph(": y>x z>x z>y"),
    graph(": y>x z>y z-x"),
    graph(": y-x z>x z-y"),
    graph(": y-x z>y z>x"),
    graph(": z>x x-y"),
    graph(": z>x x>y"),
)

FIXTURES = {
    "P2": P2,
    "Xi2": XI2,
    "P4": P4,
    "C4": C4,
    "Lambda_s": LAMBDA_S,
    "Gamma1": GAMMA1,
    "Gamma2": GAMMA2,
    "Gamma3": GAMMA3,
    "Gamma3'": GAMMA3_PRIME,
    "Gamma4": GAMMA4,
    "Lambda1": LAMBDA1,
    "Lambda2": LAMBDA2,
    "Upsilon": UPSILON,
}
