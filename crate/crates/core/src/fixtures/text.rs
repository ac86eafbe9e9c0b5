//! Plain-text transcriptions of the published generating functions, read by
//! the polynomial parser. Kept apart from the term tables in the parent
//! module so that a typo in either one shows up as a mismatch in tests.

pub(super) const K3_NUM: &str = "k*x*y*(1-(1-k)*y*(3-(2-k)*y)\
    -x*(1-y)*(4-y*(13-5*k)+(3+k)*(3-2*k)*y^2-(1-k)*(1+(3-k)*k)*y^3)\
    +x^2*(1-y)^2*(3-(2+4*k)*y+(1-k+3*k^2)*y^2+k^2*(1-k)*y^3))";
pub(super) const K3_DEN: &str = "1-x*(5-12*(2-k)*y\
    +x^2*(1-y)^2*(3-(2+4*k)*y+k*(1+2*k)*y^2+k*(1-k)*y^3-(k-1)^4*y^4)\
    -x*(1-y)*(7-(25-8*k)*y+(20-3*k-4*k^2)*y^2+(5-24*k+21*k^2-5*k^3)*y^3-(7-18*k+17*k^2-7*k^3+k^4)*y^4)\
    +y^2*(32-26*k+6*k^2-(13-14*k+6*k^2-k^3)*y))";

pub(super) const K3_K2_NUM: &str = "2*x*y*(1+3*y-x*(3-7*y+4*y^2))";
pub(super) const K3_K2_DEN: &str = "1-x*(4+3*y+y^2)+x^2*(3-7*y+3*y^2+y^3)";

pub(super) const K4_K2_NUM: &str = "2*x*y*(1+7*y-x*(y-1)*(7*y^2+y-9)+x^2*(y-1)^2*(8*y^2-17*y+8))";
pub(super) const K4_K2_DEN: &str =
    "1-2*x*(y^2+2*y+5)+x^2*(y-1)*(y^3+6*y^2+8*y-17)-x^3*(y-1)^2*(y^3+6*y^2-17*y+8)";

pub(super) const K5_K2_NUM: &str =
    "2*x*y*(1+15*y-x*(y-1)*(15*y^2-13*y-21)+x^2*(y-1)^2*(16*y^2-51*y+30))";
pub(super) const K5_K2_DEN: &str =
    "1-2*x*(y^2+4*y+11)+x^2*(y-1)*(y^3+10*y^2+2*y-51)-x^3*(y-1)^2*(y^3+10*y^2-51*y+30)";

pub(super) const K6_K2_NUM: &str = "2*x*y*(1+31*y-x*(y-1)*(62*y^2-103*y-48)\
    +x^2*(y-1)^2*(31*y^3-72*y^2-125*y+155)-x^3*(y-1)^3*(32*y^3-185*y^2+263*y-108))";
pub(super) const K6_K2_DEN: &str = "1-x*(3*y^2+12*y+49)+x^2*(y-1)*(3*y^3+28*y^2-6*y-203)\
    -x^3*(y-1)^2*(y^4+16*y^3-40*y^2-262*y+263)+x^4*(y-1)^3*(y^4+15*y^3-167*y^2+263*y-108)";

pub(super) const K4_K3_NUM: &str =
    "3*x*y*(1+6*y+2*y^2+2*x*(y-1)*(y^3-9*y^2+y+2)-x^2*(2*y-1)*(y-1)^2*(9*y^2-8*y+3))";
pub(super) const K4_K3_DEN: &str = "1-x*(2*y^3+8*y^2+12*y+5)-x^2*(y-1)*(2*y^4-13*y^3-25*y^2-y+7)\
    +x^3*(y-1)^2*(16*y^4+6*y^3-21*y^2+14*y-3)";

pub(super) const STAR_NUM: &str = "(2*y^4+6*y^3+6*y^2+2*y)*x\
    +(-8*y^7+4*y^6-28*y^5+40*y^4-44*y^3+4*y^2-16*y)*x^2\
    +(14*y^9-22*y^8-4*y^7+104*y^6-106*y^5-32*y^4+90*y^3-52*y^2+40*y)*x^3\
    +(-8*y^10-8*y^9+124*y^8-204*y^7+52*y^6+64*y^5+16*y^4-80*y^3+92*y^2-48*y)*x^4\
    +(-10*y^11+4*y^10+110*y^9-268*y^8+112*y^7+384*y^6-662*y^5+468*y^4-120*y^3-48*y^2+30*y)*x^5\
    +(16*y^11-28*y^10-156*y^9+656*y^8-1028*y^7+708*y^6-316*y^4+168*y^3-12*y^2-8*y)*x^6\
    +(8*y^11-58*y^10+228*y^9-562*y^8+852*y^7-756*y^6+340*y^5-26*y^4-36*y^3+10*y^2)*x^7";
pub(super) const STAR_DEN: &str = "1+(-y^4-y^3-y^2-7*y-9)*x\
    +(y^7+y^6+5*y^5+11*y^4-4*y^3-6*y^2+14*y+28)*x^2\
    +(-y^9-3*y^8+y^7+5*y^6-22*y^5-11*y^4+7*y^3+54*y^2-18*y-44)*x^3\
    +(7*y^9-17*y^8+2*y^7+20*y^6-32*y^5+45*y^4+42*y^3-105*y^2-y+39)*x^4\
    +(y^11+4*y^10-24*y^9+47*y^8-28*y^7-62*y^6+167*y^5-125*y^4-50*y^3+83*y^2+6*y-19)*x^5\
    +(y^11-24*y^10+94*y^9-122*y^8-61*y^7+365*y^6-409*y^5+116*y^4+116*y^3-91*y^2+11*y+4)*x^6\
    +(-3*y^11+23*y^10-74*y^9+95*y^8+45*y^7-289*y^6+355*y^5-183*y^4+18*y^3+18*y^2-5*y)*x^7";

/// Rows of the star transfer matrix; row = new configuration,
/// column = previous configuration.
pub(super) const STAR_MATRIX: [[&str; 7]; 7] = [
    [
        "y^4+1",
        "3*y^4",
        "y^4",
        "3*y^3+3*y",
        "3*y^3",
        "3*y^2",
        "y^3",
    ],
    ["0", "1", "0", "0", "y", "y^2", "0"],
    ["0", "0", "1", "0", "0", "0", "y"],
    [
        "y^2+1",
        "3*y^2+2",
        "y^2",
        "y^3+4*y+1",
        "y^3+4*y",
        "3*y^2+2*y",
        "y^2",
    ],
    ["0", "1", "1", "0", "1", "1", "y"],
    [
        "2",
        "y+5",
        "y+1",
        "(3*y^2+2*y+1)/y",
        "3*y+3",
        "y^2+2*y+3",
        "2*y",
    ],
    [
        "(y^2+1)/y^2",
        "(3*y+3)/y",
        "2",
        "(3*y+3)/y",
        "6",
        "6",
        "y+1",
    ],
];
