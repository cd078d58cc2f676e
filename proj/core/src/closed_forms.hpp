#pragma once

#include <array>

#include "trig.hpp"

namespace phasefit::detail {

template <class Real>
std::array<Real, 6> pfd0_b(const Real& v) {
  using std::cos;
  using std::sin;
  using std::tan;
  std::array<Real, 6> b;
  b[0] = (((-124184636*cos(v) + 70378348*cos(2*v) - 24862148*cos(3*v)
    + 5153611*cos(4*v))*pw(v,2) + 25*(3013169*pw(v,2) - 16128*cos(3*v) + 32256*cos(4*v)
    - 32256*cos(5*v) + 16128*cos(6*v)))*pw(csc(v/2),10)) / (206438400*pw(v,2));
  b[1] = ((pw(v,2)*(159588050*cos(v) - 85350160*cos(2*v) + 16708985*cos(3*v) - 5153611*cos(5*v))
    - 16*(6496079*pw(v,2) - 252000*cos(3*v) + 504000*cos(4*v) - 504000*cos(5*v)
    + 252000*cos(6*v)))*pw(csc(v/2),10)) / (206438400*pw(v,2));
  b[2] = (((-367257540*cos(v) + 183567900*cos(2*v) - 16708985*cos(4*v)
    + 24862148*cos(5*v))*pw(v,2) + 81*(3175117*pw(v,2) - 224000*cos(3*v) + 448000*cos(4*v)
    - 448000*cos(5*v) + 224000*cos(6*v)))*pw(csc(v/2),10)) / (206438400*pw(v,2));
  b[3] = ((30675810*cos(v)*pw(v,2) - 42958788*pw(v,2) + 75*(161280 - 611893*pw(v,2))*cos(3*v)
    + 140*(152411*pw(v,2) - 172800)*cos(4*v) + (24192000 - 17594587*pw(v,2))*cos(5*v)
    - 12096000*cos(6*v))*pw(csc(v/2),10)) / (51609600*pw(v,2));
  b[4] = ((-61351620*cos(2*v)*pw(v,2) + 85936557*pw(v,2) + 30*(6120959*pw(v,2)
    - 1411200)*cos(3*v) + 25*(3386880 - 3191761*pw(v,2))*cos(4*v) + (62092318*pw(v,2)
    - 84672000)*cos(5*v) + 42336000*cos(6*v))*pw(csc(v/2),10)) / (103219200*pw(v,2));
  b[5] = (((-171873114*cos(v) + 171835152*cos(2*v) - 257184477*cos(3*v) + 103937264*cos(4*v)
    - 75329225*cos(5*v))*pw(v,2) + 50803200*(cos(3*v) - 2*cos(4*v) + 2*cos(5*v)
    - cos(6*v)))*pw(csc(v/2),10)) / (103219200*pw(v,2));
  return b;
}

template <class Real>
std::array<Real, 6> pfd1_b(const Real& v) {
  using std::cos;
  using std::sin;
  using std::tan;
  std::array<Real, 6> b;
  b[0] = (pw(csc(v/2),10)*sec(v/2)*(53760*(2*cos(v) + 2*cos(2*v) + 2*cos(3*v) + 2*cos(5*v)
    + 1)*pw(sin(v/2),3) + v*((304823*cos(v/2) - 828603*cos(3*v/2) + 554639*cos(5*v/2)
    - 272779*cos(7*v/2))*pw(v,2) + 6720*(7*cos(5*v/2) - 15*cos(7*v/2) + 2*(9*cos(9*v/2)
    - 6*cos(11*v/2) + cos(13*v/2)))))) / (6881280*pw(v,3));
  b[1] = (pw(csc(v/2),7)*(v*((393310*cos(2*v) - 211395*cos(3*v) + 272779*cos(4*v))*pw(v,2)
    + (122851*pw(v,2) + 1088640)*cos(v) - 15*(-1817*pw(v,2) + 74368*cos(2*v) - 65856*cos(3*v)
    + 45248*cos(4*v) - 19040*cos(5*v) + 1344*cos(6*v) + 224*cos(7*v) + 36288))*pw(csc(v/2),3)
    - 26880*(10*cos(v) + 10*cos(2*v) + 9*cos(3*v) + 2*cos(4*v) + 8*cos(5*v) + cos(6*v)
    + 5)*sec(v/2))) / (1720320*pw(v,3));
  b[2] = (pw(csc(v/2),7)*(26880*(90*cos(v) + 90*cos(2*v) + 74*cos(3*v) + 32*cos(4*v)
    + 58*cos(5*v) + 16*cos(6*v) + 45)*sec(v/2) - v*((2519110*cos(2*v) - 654530*cos(3*v)
    + 272779*(6*cos(4*v) + cos(5*v)))*pw(v,2) + (1288471*pw(v,2) + 4717440)*cos(v)
    + 8*(47587*pw(v,2) - 643440*cos(2*v) + 593880*cos(3*v) - 416640*cos(4*v) + 159600*cos(5*v)
    + 18480*cos(6*v) - 6720*cos(7*v) - 294840))*pw(csc(v/2),3))) / (3440640*pw(v,3));
  b[3] = (pw(csc(v/2),7)*(v*(1578002*pw(v,2) + 2*(161489*pw(v,2) + 725760)*cos(v)
    + 160*(20521*pw(v,2) - 13776)*cos(2*v) + 5*(478464 - 4069*pw(v,2))*cos(3*v)
    + 2*(738791*pw(v,2) - 900480)*cos(4*v) + 3*(205341*pw(v,2) + 156800)*cos(5*v)
    + 510720*cos(6*v) - 94080*cos(7*v) - 725760)*pw(csc(v/2),3) - 107520*(30*cos(v)
    + 30*cos(2*v) + 23*cos(3*v) + 14*cos(4*v) + 16*cos(5*v) + 7*cos(6*v)
    + 15)*sec(v/2))) / (1720320*pw(v,3));
  b[4] = (-pw(csc(v/2),7)*(v*(923342*pw(v,2) + 28*(343339*pw(v,2) - 181440)*cos(v)
    + 20*(240593*pw(v,2) + 103488)*cos(2*v) + 5*(832859*pw(v,2) + 18816)*cos(3*v)
    + 2*(1574159*pw(v,2) - 376320)*cos(4*v) + 3*(913431*pw(v,2) - 313600)*cos(5*v)
    + 2446080*cos(6*v) - 376320*cos(7*v) + 2540160)*pw(csc(v/2),3) - 376320*(30*cos(v)
    + 30*cos(2*v) + 22*cos(3*v) + 16*cos(4*v) + 14*cos(5*v) + 8*cos(6*v)
    + 15)*sec(v/2))) / (3440640*pw(v,3));
  b[5] = (pw(csc(v/2),7)*(v*(7*(65953*pw(v,2) + 181440) + 7*(379709*pw(v,2) - 362880)*cos(v)
    + 2*(694753*pw(v,2) + 799680)*cos(2*v) + 4*(360653*pw(v,2) - 199920)*cos(3*v)
    + 15*(52889*pw(v,2) + 21952)*cos(4*v) + (875393*pw(v,2) - 540960)*cos(5*v) + 799680*cos(6*v)
    - 117600*cos(7*v))*pw(csc(v/2),3) - 188160*(18*cos(v) + 18*cos(2*v) + 13*cos(3*v)
    + 10*cos(4*v) + 8*cos(5*v) + 5*cos(6*v) + 9)*sec(v/2))) / (860160*pw(v,3));
  return b;
}

template <class Real>
std::array<Real, 6> pfd2_b(const Real& v) {
  using std::cos;
  using std::sin;
  using std::tan;
  std::array<Real, 6> b;
  b[0] = (-30720*(pw(v,2) - 1)*cos(v) - 10*(-387*pw(csc(v/2),6) + 72*(128*cos(v)
    + 127)*pw(csc(v),2) + 2048*(pw(v,2) - 3)) - (8*(-47*pw(v,4) - 2040*pw(v,2) - (40*((22*cos(v)
    + 22*cos(2*v) + 9*cos(3*v) + 14*cos(4*v) + 8*cos(5*v) - 5*cos(6*v) + 11)*pw(tan(v/2),3)
    - 27*pw(v,3))*v)/(cos(v) - 1) + (4817*pw(v,4) + 3120*pw(v,2) + 4410)*cos(v) - 2205*cos(2*v)
    - 2205))/pw(cos(v) - 1,4)) / (5120*pw(v,4));
  b[1] = (-1350*pw(v,4)*pw(csc(v/2),10) + 225*pw(v,2)*(59*pw(v,2) + 12)*pw(csc(v/2),8)
    - 5*(7361*pw(v,4) + 3696*pw(v,2) - 540)*pw(csc(v/2),6) + 6*(4817*pw(v,4) + 3120*pw(v,2)
    - 7710)*pw(csc(v/2),4) + 264780*pw(csc(v/2),2) + 30720*(3*pw(v,2) - 7)*cos(v)
    + 15360*(pw(v,2) - 2)*cos(2*v) + 30*v*cot(v/2)*((-2436*cos(v) + 1921*cos(2*v)
    + 1595)*pw(csc(v/2),6)/8 + 8322) + 10*(5632*pw(v,2) - 1024*(8*cos(v) + 23)*sin(v)*v
    + 6*(65*cos(v) + 66)*tan(v/2)*v/(cos(v) + 1) - 36/(cos(v) + 1) - 39936)) / (2560*pw(v,4));
  b[2] = (12150*pw(v,4)*pw(csc(v/2),10) - 675*pw(v,2)*(191*pw(v,2) + 36)*pw(csc(v/2),8)
    + 15*(28499*pw(v,4) + 12432*pw(v,2) - 1620)*pw(csc(v/2),6) - 36450*v*cot(v/2)*pw(csc(v/2),6)
    - 12*(44896*pw(v,4) + 26400*pw(v,2) - 35955)*pw(csc(v/2),4)
    + 381960*v*cot(v/2)*pw(csc(v/2),4) + 12*(19268*pw(v,4) + 12480*pw(v,2)
    - 219885)*pw(csc(v/2),2) - 817950*v*cot(v/2)*pw(csc(v/2),2) - 540*pw(sec(v/2),2)
    - 5120*(73*pw(v,2) - 831) - 61440*(9*pw(v,2) - 40)*cos(v) - 61440*(3*pw(v,2) - 8)*cos(2*v)
    - 10240*(pw(v,2) - 3)*cos(3*v) - 1512900*v*cot(v/2) + 1884160*v*sin(v) + 532480*v*sin(2*v)
    + 30720*v*sin(3*v) + 90*v*pw(sec(v/2),2)*tan(v/2) + 7740*v*tan(v/2)) / (5120*pw(v,4));
  b[3] = (-4050*pw(v,4)*pw(csc(v/2),10) + 675*pw(v,2)*(67*pw(v,2) + 12)*pw(csc(v/2),8)
    - 15*(11113*pw(v,4) + 4464*pw(v,2) - 540)*pw(csc(v/2),6) + 12150*v*cot(v/2)*pw(csc(v/2),6)
    + 6*(43259*pw(v,4) + 24000*pw(v,2) - 24570)*pw(csc(v/2),4)
    - 133920*v*cot(v/2)*pw(csc(v/2),4) + 347250*v*cot(v/2)*pw(csc(v/2),2) + 8*(4817*pw(v,4)
    + 15840*pw(v,2) - 197280) + 7680*(19*pw(v,2) - 125)*cos(v) + 30720*(2*pw(v,2) - 7)*cos(2*v)
    + 7680*(pw(v,2) - 3)*cos(3*v) + 292500*v*cot(v/2) - 555520*v*sin(v) - 194560*v*sin(2*v)
    - 23040*v*sin(3*v) - 30*v*pw(sec(v/2),2)*tan(v/2) - 3180*v*tan(v/2) + 72*(4817*pw(v,4)
    + 3120*pw(v,2) - 26165)/(cos(v) - 1) + 360/(cos(v) + 1)) / (640*pw(v,4));
  b[4] = (28350*pw(v,4)*pw(csc(v/2),10) - 14175*pw(v,2)*(23*pw(v,2) + 4)*pw(csc(v/2),8)
    + 45*(28269*pw(v,4) + 10864*pw(v,2) - 1260)*pw(csc(v/2),6) - 85050*v*cot(v/2)*pw(csc(v/2),6)
    - 12*(182576*pw(v,4) + 98160*pw(v,2) - 87255)*pw(csc(v/2),4)
    + 965160*v*cot(v/2)*pw(csc(v/2),4) + 180*(9634*pw(v,4) + 6240*pw(v,2)
    - 38111)*pw(csc(v/2),2) - 2753430*v*cot(v/2)*pw(csc(v/2),2) - 256*(2011*pw(v,4)
    + 3870*pw(v,2) - 45810) - 15360*(61*pw(v,2) - 479)*cos(v) - 30720*(13*pw(v,2) - 56)*cos(2*v)
    - 76800*(pw(v,2) - 3)*cos(3*v) - 1054260*v*cot(v/2) + 3537920*v*sin(v) + 1372160*v*sin(2*v)
    + 230400*v*sin(3*v) - 30*v*pw(sec(v/2),2)*tan(v/2) - 2100*v*tan(v/2) + 360/(cos(v)
    + 1)) / (2560*pw(v,4));
  b[5] = (93048*pw(v,4) + 156160*pw(v,2) + 1042425*pw(csc(v/2),2) + 15360*(9*pw(v,2)
    - 74)*cos(v) - 268800*cos(2*v) - 38400*cos(3*v) - (9*(7560*pw(csc(v/2),2) + 14963)*pw(v,4)
    + 187840*pw(v,2) - 4*(237663*pw(v,4) + 77080*pw(v,2) + 298620)*cos(v) + 5*((34095*pw(v,4)
    - 4000*pw(v,2) + 63126)*cos(2*v) - 2*v*(v*(14451*pw(v,2) - 5200)*cos(3*v)
    + 8*(5*v*(140*cos(4*v) - 16*cos(5*v) - 7*cos(6*v) + 2*cos(7*v)) - 666*sin(v) + 600*sin(2*v)
    - 298*sin(3*v) + 238*sin(4*v) + 40*sin(5*v) + 80*sin(6*v) - 30*sin(7*v))
    + 36*(pw(sec(v/2),2) + 94)*tan(v/2))) + 878850)/pw(cos(v) - 1,4) - 270/(cos(v) + 1)
    - 1793280) / (320*pw(v,4));
  return b;
}

template <class Real>
std::array<Real, 6> pfd3_b(const Real& v) {
  using std::cos;
  using std::sin;
  using std::tan;
  std::array<Real, 6> b;
  b[0] = (-108*pw(v,5)*pw(csc(v/2),10) + 9*pw(v,3)*(53*pw(v,2) + 12)*pw(csc(v/2),8)
    + 486*v*pw(csc(v/2),6) - 2484*v*pw(csc(v/2),4) - 6144*v*(4*pw(v,2) - 9)*cos(v)
    + 3*cot(v/2)*(99*pw(v,2)*pw(csc(v/2),6) + 9*(16 - 9*pw(v,2))*pw(csc(v/2),4) - 8*(113*pw(v,2)
    + 276)*pw(csc(v/2),2) - 11266*pw(v,2) + 10032) - 6144*(pw(v,3) - 6*v + 4*sin(v))
    + 2*pw(v,2)*(26624*sin(v) - 5635*tan(v/2)) + 5520*tan(v/2) - 9*v*pw(sec(v/2),4)*(v*tan(v/2)
    - 6) - 6*pw(sec(v/2),2)*((61*pw(v,2) + 24)*tan(v/2) - 363*v) + 32508*v/(cos(v)
    - 1)) / (3072*pw(v,5));
  b[1] = (540*pw(v,5)*pw(csc(v/2),10) - 45*pw(v,3)*(71*pw(v,2) + 12)*pw(csc(v/2),8)
    + 18*v*(212*pw(v,4) + 48*pw(v,2) - 135)*pw(csc(v/2),6)
    - 1485*pw(v,2)*cot(v/2)*pw(csc(v/2),6) + 15984*v*pw(csc(v/2),4) + 27*(131*pw(v,2)
    - 80)*cot(v/2)*pw(csc(v/2),4) + 55782*v*pw(csc(v/2),2) + 6*(1777*pw(v,2)
    + 5952)*cot(v/2)*pw(csc(v/2),2) + 54*v*pw(sec(v/2),4) + 6144*v*(5*pw(v,2) - 39)
    + 6144*v*(8*pw(v,2) - 33)*cos(v) + 18432*v*(pw(v,2) - 4)*cos(2*v) + 6*(20035*pw(v,2)
    - 31704)*cot(v/2) - 20480*(7*pw(v,2) - 6)*sin(v) + 3072*(12 - 19*pw(v,2))*sin(2*v)
    - 9*pw(v,2)*pw(sec(v/2),4)*tan(v/2) - 12*(23*pw(v,2) + 12)*pw(sec(v/2),2)*tan(v/2) + 14*(456
    - 337*pw(v,2))*tan(v/2) + 3276*v/(cos(v) + 1)) / (1536*pw(v,5));
  b[2] = (-1620*pw(v,5)*pw(csc(v/2),10) + 135*pw(v,3)*(85*pw(v,2) + 12)*pw(csc(v/2),8)
    - 6*v*(3872*pw(v,4) + 768*pw(v,2) - 1215)*pw(csc(v/2),6)
    + 4455*pw(v,2)*cot(v/2)*pw(csc(v/2),6) + 36*v*(424*pw(v,4) + 96*pw(v,2)
    - 1563)*pw(csc(v/2),4) + 9*(720 - 1781*pw(v,2))*cot(v/2)*pw(csc(v/2),4)
    - 96642*v*pw(csc(v/2),2) - 24*(685*pw(v,2) + 4716)*cot(v/2)*pw(csc(v/2),2)
    - 54*v*pw(sec(v/2),4) + 1024*v*(606 - 67*pw(v,2)) - 49152*v*(2*pw(v,2) - 13)*cos(v)
    - 49152*v*(pw(v,2) - 5)*cos(2*v) + 2048*v*(21 - 4*pw(v,2))*cos(3*v) + 6*(111720
    - 46199*pw(v,2))*cot(v/2) + 32768*(11*pw(v,2) - 15)*sin(v) + 4096*(41*pw(v,2) - 36)*sin(2*v)
    + 4096*(7*pw(v,2) - 6)*sin(3*v) + 9*pw(v,2)*pw(sec(v/2),4)*tan(v/2) + 6*(61*pw(v,2)
    + 24)*pw(sec(v/2),2)*tan(v/2) + 10*(1055*pw(v,2) - 552)*tan(v/2) - 4356*v/(cos(v)
    + 1)) / (1024*pw(v,5));
  b[3] = (1620*pw(v,5)*pw(csc(v/2),10) - 135*pw(v,3)*(95*pw(v,2) + 12)*pw(csc(v/2),8)
    + 18*v*(1844*pw(v,4) + 336*pw(v,2) - 405)*pw(csc(v/2),6)
    - 4455*pw(v,2)*cot(v/2)*pw(csc(v/2),6) - 216*v*(169*pw(v,4) + 36*pw(v,2)
    - 288)*pw(csc(v/2),4) + 27*(737*pw(v,2) - 240)*cot(v/2)*pw(csc(v/2),4) + 18*v*(848*pw(v,4)
    + 192*pw(v,2) + 2229)*pw(csc(v/2),2) + 18*(35*pw(v,2) + 6528)*cot(v/2)*pw(csc(v/2),2)
    - 54*v*pw(sec(v/2),4) + 384*v*(133*pw(v,2) - 1350) + 768*v*(112*pw(v,2) - 843)*cos(v)
    + 3072*v*(13*pw(v,2) - 81)*cos(2*v) + 1536*v*(8*pw(v,2) - 45)*cos(3*v) + 768*v*(pw(v,2)
    - 6)*cos(4*v) + 54*(4447*pw(v,2) - 13800)*cot(v/2) + 512*(1146 - 659*pw(v,2))*sin(v)
    - 512*(289*pw(v,2) - 348)*sin(2*v) + 1024*(42 - 43*pw(v,2))*sin(3*v) + 256*(12
    - 11*pw(v,2))*sin(4*v) + (9*pw(v,2)*pw(sec(v/2),4) + 5258*pw(v,2) + (552*pw(v,2)
    + 288)/(cos(v) + 1) - 6384)*tan(v/2) - 3276*v/(cos(v) + 1)) / (384*pw(v,5));
  b[4] = (-11340*pw(v,5)*pw(csc(v/2),10) + 945*pw(v,3)*(101*pw(v,2) + 12)*pw(csc(v/2),8)
    - 18*v*(15472*pw(v,4) + 2688*pw(v,2) - 2835)*pw(csc(v/2),6)
    + 31185*pw(v,2)*cot(v/2)*pw(csc(v/2),6) + 108*v*(3500*pw(v,4) + 720*pw(v,2)
    - 4263)*pw(csc(v/2),4) + 189*(240 - 823*pw(v,2))*cot(v/2)*pw(csc(v/2),4) + 864*(87*pw(v,2)
    - 973)*cot(v/2)*pw(csc(v/2),2) + 54*v*pw(sec(v/2),4) + 384*v*(159*pw(v,4) - 796*pw(v,2)
    + 8568) + 3072*v*(1395 - 172*pw(v,2))*cos(v) - 24576*v*(11*pw(v,2) - 75)*cos(2*v)
    + 3072*v*(171 - 28*pw(v,2))*cos(3*v) - 12288*v*(pw(v,2) - 6)*cos(4*v) + 18*(307848
    - 88943*pw(v,2))*cot(v/2) + 2048*(1055*pw(v,2) - 2154)*sin(v) + 2048*(505*pw(v,2)
    - 708)*sin(2*v) + 2048*(155*pw(v,2) - 174)*sin(3*v) + 4096*(11*pw(v,2) - 12)*sin(4*v)
    - 9*pw(v,2)*pw(sec(v/2),4)*tan(v/2) - 6*(61*pw(v,2) + 24)*pw(sec(v/2),2)*tan(v/2) + 10*(552
    - 1019*pw(v,2))*tan(v/2) + 36*v*(256*(53*pw(v,2) + 12)*pw(v,2) + 1479)/(cos(v) - 1)
    + 4356*v/(cos(v) + 1)) / (1536*pw(v,5));
  b[5] = (2268*pw(v,5)*pw(csc(v/2),10) - 189*pw(v,3)*(103*pw(v,2) + 12)*pw(csc(v/2),8)
    + 6*v*(9820*pw(v,4) + 1680*pw(v,2) - 1701)*pw(csc(v/2),6)
    - 6237*pw(v,2)*cot(v/2)*pw(csc(v/2),6) - 144*v*(590*pw(v,4) + 120*pw(v,2)
    - 651)*pw(csc(v/2),4) + 63*(511*pw(v,2) - 144)*cot(v/2)*pw(csc(v/2),4) + 18*v*(3392*pw(v,4)
    + 768*pw(v,2) - 677)*pw(csc(v/2),2) + 6*(28224 - 3463*pw(v,2))*cot(v/2)*pw(csc(v/2),2)
    + 54*v*pw(sec(v/2),4) - 128*v*(141*pw(v,4) - 460*pw(v,2) + 5016) + 3072*v*(32*pw(v,2)
    - 269)*cos(v) + 6144*v*(9*pw(v,2) - 62)*cos(2*v) + 2048*v*(8*pw(v,2) - 51)*cos(3*v)
    + 3072*v*(pw(v,2) - 6)*cos(4*v) + 1002*(317*pw(v,2) - 1128)*cot(v/2) - 6144*(67*pw(v,2)
    - 146)*sin(v) - 3072*(69*pw(v,2) - 100)*sin(2*v) - 12288*(5*pw(v,2) - 6)*sin(3*v) + 1024*(12
    - 11*pw(v,2))*sin(4*v) - (9*pw(v,2)*pw(sec(v/2),4) + 5438*pw(v,2) + (552*pw(v,2)
    + 288)/(cos(v) + 1) - 6384)*tan(v/2) + 3276*v/(cos(v) + 1)) / (256*pw(v,5));
  return b;
}

template <class Real>
std::array<Real, 6> pfd4_b(const Real& v) {
  using std::cos;
  using std::sin;
  using std::tan;
  std::array<Real, 6> b;
  b[0] = (216*pw(v,6)*pw(csc(v/2),10) - 810*pw(v,2)*pw(csc(v/2),6) - 54*(157*pw(v,2)
    + 80)*pw(csc(v/2),4) + 36*(1840 - 2257*pw(v,2))*pw(csc(v/2),2) - 12288*(20*pw(v,4)
    - 71*pw(v,2) + 20)*cos(v) - 3*v*cot(v/2)*((4682*pw(v,2)
    + 9*pw(csc(v/2),2)*(5*pw(csc(v/2),2)*pw(v,2) + 54*pw(v,2) + 96) + 5856)*pw(csc(v/2),2)
    + 2520*(31*pw(v,2) - 48)) - 45*pw(v,2)*pw(sec(v/2),6)*(v*tan(v/2) - 6)
    + 56*v*(1024*(11*pw(v,2) - 12)*sin(v) + 135*(48 - 31*pw(v,2))*tan(v/2))
    - 18*pw(sec(v/2),4)*(-373*pw(v,2) + 3*(21*pw(v,2) + 16)*tan(v/2)*v - 80)
    - 2*pw(sec(v/2),2)*(-39246*pw(v,2) + (6733*pw(v,2) + 6384)*tan(v/2)*v
    + 28320)) / (24576*pw(v,6));
  b[1] = (-1080*pw(v,6)*pw(csc(v/2),10) + 2160*pw(v,6)*pw(csc(v/2),8)
    + 4050*pw(v,2)*pw(csc(v/2),6) + 54*(617*pw(v,2) + 400)*pw(csc(v/2),4)
    + 293508*pw(v,2)*pw(csc(v/2),2) + 12288*(20*pw(v,4) - 71*pw(v,2) + 20)*cos(v)
    + 24576*(10*pw(v,4) - 59*pw(v,2) + 20)*cos(2*v) + 3*v*cot(v/2)*((16978*pw(v,2)
    + 9*pw(csc(v/2),2)*(25*pw(csc(v/2),2)*pw(v,2) + 214*pw(v,2) + 480) + 20064)*pw(csc(v/2),2)
    + 120*(2341*pw(v,2) - 5136)) + (72*(4096*pw(v,4) - 31783*pw(v,2) - 80*(257*cos(v)
    + 251)*pw(csc(v),2) + 1024*(4*pw(v,4) - 35*pw(v,2) + 20)*cos(v) + 25600))/(cos(v) + 1)
    - v*(135*v*(v*tan(v/2) - 6)*pw(sec(v/2),6) + 18*((161*pw(v,2) + 144)*tan(v/2)
    - 951*v)*pw(sec(v/2),4) + 18*(1407*pw(v,2) + 1616)*tan(v/2)*pw(sec(v/2),2)
    + 8*(7168*(11*pw(v,2) - 12)*sin(v) + 1024*(107*pw(v,2) - 156)*sin(2*v) + 15*(3217*pw(v,2)
    - 9168)*tan(v/2)))) / (12288*pw(v,6));
  b[2] = (9720*pw(v,6)*pw(csc(v/2),10) - 34560*pw(v,6)*pw(csc(v/2),8) + 270*pw(v,2)*(128*pw(v,4)
    - 135)*pw(csc(v/2),6) - 6075*pw(v,3)*cot(v/2)*pw(csc(v/2),6) - 162*(1459*pw(v,2)
    + 1200)*pw(csc(v/2),4) - 54*v*(767*pw(v,2) + 2160)*cot(v/2)*pw(csc(v/2),4) + 108*(32720
    - 18831*pw(v,2))*pw(csc(v/2),2) - 234*v*(1511*pw(v,2) + 1488)*cot(v/2)*pw(csc(v/2),2)
    + 3510*pw(v,2)*pw(sec(v/2),6) + 90*(701*pw(v,2) + 208)*pw(sec(v/2),4) - 12288*(98*pw(v,4)
    - 825*pw(v,2) + 540) - 12288*(220*pw(v,4) - 1717*pw(v,2) + 940)*cos(v) - 98304*(10*pw(v,4)
    - 59*pw(v,2) + 20)*cos(2*v) - 24576*(20*pw(v,4) - 147*pw(v,2) + 60)*cos(3*v) + 360*v*(45744
    - 16567*pw(v,2))*cot(v/2) + 8192*v*(1279*pw(v,2) - 2868)*sin(v) + 32768*v*(107*pw(v,2)
    - 156)*sin(2*v) + 147456*v*(13*pw(v,2) - 24)*sin(3*v) - v*(585*pw(v,2)*pw(sec(v/2),6)
    + (42991*pw(v,2) + (32281*pw(v,2) + 46128)*cos(v) + 57360)*pw(sec(v/2),4)
    + 120*(8741*pw(v,2) - 38928))*tan(v/2) + 24*(30457*pw(v,2) - 69040)/(cos(v)
    + 1)) / (24576*pw(v,6));
  b[3] = (-3240*pw(v,6)*pw(csc(v/2),10) + 15120*pw(v,6)*pw(csc(v/2),8) - 810*pw(v,2)*(32*pw(v,4)
    - 15)*pw(csc(v/2),6) + 2025*pw(v,3)*cot(v/2)*pw(csc(v/2),6) + 54*(320*pw(v,6) + 1179*pw(v,2)
    + 1200)*pw(csc(v/2),4) + 54*v*(209*pw(v,2) + 720)*cot(v/2)*pw(csc(v/2),4)
    + 108*(5237*pw(v,2) - 11440)*pw(csc(v/2),2) + 18*v*(5461*pw(v,2)
    + 3888)*cot(v/2)*pw(csc(v/2),2) + 270*pw(v,2)*pw(sec(v/2),6) + 90*(41*pw(v,2)
    + 16)*pw(sec(v/2),4) + 76800*(5*pw(v,4) - 54*pw(v,2) + 48) + 6144*(100*pw(v,4) - 819*pw(v,2)
    + 480)*cos(v) + 73728*(5*pw(v,4) - 39*pw(v,2) + 20)*cos(2*v) + 6144*(20*pw(v,4)
    - 147*pw(v,2) + 60)*cos(3*v) + 6144*(5*pw(v,4) - 41*pw(v,2) + 20)*cos(4*v)
    + 360*v*(4705*pw(v,2) - 14928)*cot(v/2) - 36864*v*(67*pw(v,2) - 154)*sin(v)
    - 86016*v*(17*pw(v,2) - 36)*sin(2*v) - 36864*v*(13*pw(v,2) - 24)*sin(3*v)
    - 2048*v*(61*pw(v,2) - 132)*sin(4*v) - v*(((1087 + 90/(cos(v) + 1))*pw(v,2) + (457*pw(v,2)
    + 1776)*cos(v) + 2640)*pw(sec(v/2),4) + 120*(349*pw(v,2) - 2832))*tan(v/2) + 24*(349*pw(v,2)
    - 5680)/(cos(v) + 1)) / (3072*pw(v,6));
  b[4] = (22680*pw(v,6)*pw(csc(v/2),10) - 120960*pw(v,6)*pw(csc(v/2),8)
    + 4050*pw(v,2)*(64*pw(v,4) - 21)*pw(csc(v/2),6) - 14175*pw(v,3)*cot(v/2)*pw(csc(v/2),6)
    - 54*(5120*pw(v,6) + 7077*pw(v,2) + 8400)*pw(csc(v/2),4) - 378*v*(181*pw(v,2)
    + 720)*cot(v/2)*pw(csc(v/2),4) + 108*(1280*pw(v,6) - 33131*pw(v,2) + 82320)*pw(csc(v/2),2)
    - 378*v*(1643*pw(v,2) + 784)*cot(v/2)*pw(csc(v/2),2) - 1890*pw(v,2)*pw(sec(v/2),6)
    - 126*(277*pw(v,2) + 80)*pw(sec(v/2),4) - 15360*(160*pw(v,4) - 1833*pw(v,2) + 1740)
    - 30720*(120*pw(v,4) - 1079*pw(v,2) + 740)*cos(v) - 6144*(400*pw(v,4) - 3271*pw(v,2)
    + 1780)*cos(2*v) - 6144*(140*pw(v,4) - 1113*pw(v,2) + 540)*cos(3*v) - 49152*(5*pw(v,4)
    - 41*pw(v,2) + 20)*cos(4*v) - 6144*(4*pw(v,4) - 35*pw(v,2) + 20)*cos(5*v) + 360*v*(102576
    - 30047*pw(v,2))*cot(v/2) + 20480*v*(755*pw(v,2) - 1956)*sin(v) + 4096*v*(2429*pw(v,2)
    - 5412)*sin(2*v) + 12288*v*(281*pw(v,2) - 588)*sin(3*v) + 16384*v*(61*pw(v,2)
    - 132)*sin(4*v) + 20480*v*(5*pw(v,2) - 12)*sin(5*v) + v*(((25429 + 630/(cos(v) + 1))*pw(v,2)
    + (19507*pw(v,2) + 26256)*cos(v) + 32304)*pw(sec(v/2),4) + 120*(5347*pw(v,2)
    - 20976))*tan(v/2) + (885120 - 443976*pw(v,2))/(cos(v) + 1)) / (12288*pw(v,6));
  b[5] = (-13608*pw(v,6)*pw(csc(v/2),10) + 75600*pw(v,6)*pw(csc(v/2),8) + 270*pw(v,2)*(189
    - 640*pw(v,4))*pw(csc(v/2),6) + 8505*pw(v,3)*cot(v/2)*pw(csc(v/2),6) + 162*(1280*pw(v,6)
    + 1337*pw(v,2) + 1680)*pw(csc(v/2),4) + 378*v*(103*pw(v,2) + 432)*cot(v/2)*pw(csc(v/2),4)
    + 126*v*(2863*pw(v,2) + 1104)*cot(v/2)*pw(csc(v/2),2) - 1890*pw(v,2)*pw(sec(v/2),6)
    - 126*(253*pw(v,2) + 80)*pw(sec(v/2),4) + 3072*(18*pw(v,6) + 400*pw(v,4) - 4575*pw(v,2)
    + 4500) + 30720*(80*pw(v,4) - 753*pw(v,2) + 540)*cos(v) + 30720*(40*pw(v,4) - 327*pw(v,2)
    + 180)*cos(2*v) + 6144*(100*pw(v,4) - 819*pw(v,2) + 420)*cos(3*v) + 24576*(5*pw(v,4)
    - 41*pw(v,2) + 20)*cos(4*v) + 6144*(4*pw(v,4) - 35*pw(v,2) + 20)*cos(5*v)
    + 360*v*(17495*pw(v,2) - 61104)*cot(v/2) - 552960*v*(19*pw(v,2) - 52)*sin(v)
    - 552960*v*(9*pw(v,2) - 20)*sin(2*v) - 12288*v*(203*pw(v,2) - 444)*sin(3*v)
    - 8192*v*(61*pw(v,2) - 132)*sin(4*v) - 20480*v*(5*pw(v,2) - 12)*sin(5*v)
    + v*(63*(48*(pw(v,2) + 1) + (43*pw(v,2) + 48)*cos(v))*pw(sec(v/2),6) + 840*(659*pw(v,2)
    - 2928) + (57964*pw(v,2) + 86592)/(cos(v) + 1))*tan(v/2) + 216*(1280*pw(v,6) - 19257*pw(v,2)
    + 49840)/(cos(v) - 1) + (908160 - 325608*pw(v,2))/(cos(v) + 1)) / (6144*pw(v,6));
  return b;
}

template <class Real>
std::array<Real, 6> pfd5_b(const Real& v) {
  using std::cos;
  using std::sin;
  using std::tan;
  std::array<Real, 6> b;
  b[0] = (-pw(cos(v/2),5)*pw(csc(v),13)*pw(sin(v/2),7)*(60*(-5*pw(v,5) + 3*pw(v,3) + 3*sin(v)
    - 6*sin(3*v) + 3*sin(4*v) + 3*sin(5*v) - 6*sin(6*v) + 3*sin(8*v)) + v*(15*(200*pw(v,4)
    + 283*pw(v,2) - 100)*cos(v) + 300*(2*cos(2*v) + 6*cos(3*v) - 10*cos(4*v) + cos(5*v)
    + 12*cos(6*v) - 2*cos(7*v) - 4*cos(8*v)) + v*(v*(15*(366*cos(3*v) + 686*cos(4*v)
    - 503*cos(5*v) - 480*cos(6*v) + 142*cos(7*v) + 116*cos(8*v)) + 2*(15*(72*pw(v,2)
    - 155)*cos(2*v) + v*(-60*v*(45*cos(3*v) + 24*cos(4*v) - 25*cos(5*v) - 14*cos(6*v)
    + 5*cos(7*v) + 3*cos(8*v)) + 405*cot(v/2) + 357*sin(v) - 2530*sin(2*v) + 4516*sin(3*v)
    + 3752*sin(4*v) - 3373*sin(5*v) - 2324*sin(6*v) + 770*sin(7*v) + 522*sin(8*v)
    + 315*tan(v/2)))) - 60*(49*sin(v) - 44*sin(2*v) - 6*sin(3*v) + 131*sin(4*v) - 67*sin(5*v)
    - 114*sin(6*v) + 28*sin(7*v) + 31*sin(8*v))))/2)) / (30*pw(v,7));
  b[1] = (pw(csc(v/2),7)*pw(sec(v/2),9)*(4*(3875*pw(v,4) - 519*pw(v,2) - 90)*cos(v)
    - 36*(147*pw(v,4) - 76*pw(v,2) - 10*cos(2*v) + 20*cos(4*v) - 20*cos(5*v) + 10*cos(7*v)
    - 20*cos(8*v) + 10*cos(10*v)) + v*(v*(2*(5117*pw(v,2) - 4254)*cos(2*v) + 12*(516*cos(3*v)
    + 482*cos(4*v) - 158*cos(5*v) + 348*cos(6*v) - 317*cos(7*v) - 486*cos(8*v) + 132*cos(9*v)
    + 137*cos(10*v)) + v*(3*(-12*sin(v) - 3789*sin(2*v) + 3900*sin(3*v) + 2058*sin(4*v)
    + 708*sin(5*v) + 1632*sin(6*v) - 2142*sin(7*v) - 1792*sin(8*v) + 614*sin(9*v)
    + 461*sin(10*v)) - 2*v*(-393216*v*(15*cos(2*v) + 17)*pw(sin(v/2),7)*pw(cos(v/2),9)
    + 4476*cos(3*v) + 1918*cos(4*v) + 2288*cos(5*v) + 1242*cos(6*v) - 2476*cos(7*v)
    - 1400*cos(8*v) + 582*cos(9*v) + 351*cos(10*v)))) - 15360*pw(cos(v/2),3)*(186*cos(v)
    + 156*cos(2*v) + 132*cos(3*v) + 78*cos(4*v) + 48*cos(5*v) + 19*cos(6*v)
    + 98)*pw(sin(v/2),5)))) / (393216*pw(v,7));
  b[2] = (-pw(cos(v/2),6)*pw(csc(v),14)*pw(sin(v/2),8)*(7290*cot(v/2)*pw(v,4)
    + 5670*tan(v/2)*pw(v,4) + 32*(56*pw(v,2) - 93)*sin(9*v)*pw(v,2) + 12*(250*pw(v,4)
    - 751*pw(v,2) + 100)*v + 3*(2140*pw(v,4) + 13737*pw(v,2) - 2220)*cos(v)*v - 6*(260*pw(v,4)
    - 591*pw(v,2) + 540)*cos(2*v)*v + 6*(-1702*pw(v,4) + 2971*pw(v,2) + 1100)*cos(3*v)*v
    - 6*(584*pw(v,4) - 3933*pw(v,2) + 1020)*cos(4*v)*v + 15*(236*pw(v,4) - 1395*pw(v,2)
    + 228)*cos(5*v)*v + 12*(182*pw(v,4) - 1121*pw(v,2) + 800)*cos(6*v)*v + 12*(61*pw(v,4)
    - 201*pw(v,2) - 180)*cos(7*v)*v + 12*(10*pw(v,4) - 171*pw(v,2) + 60)*cos(8*v)*v
    - 60*(8*pw(v,4) - 53*pw(v,2) + 20)*cos(9*v)*v - 24*(10*pw(v,4) - 93*pw(v,2)
    + 90)*cos(10*v)*v + 6*(1327*pw(v,4) - 974*pw(v,2) - 60)*sin(v) - 4*(1295*pw(v,4)
    + 1098*pw(v,2) - 180)*sin(2*v) + 8*(3403*pw(v,4) + 579*pw(v,2) - 270)*sin(3*v)
    + 4*(3256*pw(v,4) - 4557*pw(v,2) + 90)*sin(4*v) + 2*(-6097*pw(v,4) + 8058*pw(v,2)
    + 180)*sin(5*v) - 8*(935*pw(v,4) - 1929*pw(v,2) + 270)*sin(6*v) - 4*(593*pw(v,4)
    + 126*pw(v,2) - 180)*sin(7*v) - 4*(pw(v,2) - 3)*(199*pw(v,2) + 30)*sin(8*v) + 8*(127*pw(v,4)
    - 363*pw(v,2) + 90)*sin(10*v))) / (6*pw(v,7));
  b[3] = (5670*pw(v,3)*pw(sec(v/2),8) - 945*pw(v,4)*tan(v/2)*pw(sec(v/2),8) + 270*v*(257*pw(v,2)
    + 160)*pw(sec(v/2),6) - 1080*pw(v,2)*(11*pw(v,2) + 18)*tan(v/2)*pw(sec(v/2),6)
    + 4320*v*(51*pw(v,2) - 46)*pw(sec(v/2),4) - 18*(2267*pw(v,4) + 9816*pw(v,2)
    + 2880)*tan(v/2)*pw(sec(v/2),4) + 4*(-61651*pw(v,4) + 89664*pw(v,2)
    + 570240)*tan(v/2)*pw(sec(v/2),2) + 7290*pw(v,3)*pw(csc(v/2),6)
    + 1215*pw(v,4)*cot(v/2)*pw(csc(v/2),6) + 78732*pw(v,3)*pw(csc(v/2),4)
    + 81*pw(v,2)*(167*pw(v,2) + 240)*cot(v/2)*pw(csc(v/2),4) + 756*v*(1127*pw(v,2)
    - 2640)*pw(csc(v/2),2) + 9*(16297*pw(v,4) + 2592*pw(v,2) - 17280)*cot(v/2)*pw(csc(v/2),2)
    + 46080*v*(30*pw(v,4) - 443*pw(v,2) + 980) + 73728*v*(101*pw(v,2) - 370)*cos(v)
    + 36864*v*(40*pw(v,4) - 431*pw(v,2) + 580)*cos(2*v) + 73728*v*(13*pw(v,2) - 40)*cos(3*v)
    + 6144*v*(30*pw(v,4) - 307*pw(v,2) + 340)*cos(4*v) + 9*(342973*pw(v,4) - 1171680*pw(v,2)
    + 328320)*cot(v/2) + 73728*(17*pw(v,4) - 271*pw(v,2) + 210)*sin(v) - 98304*(67*pw(v,4)
    - 243*pw(v,2) + 90)*sin(2*v) + 16384*(10*pw(v,4) - 147*pw(v,2) + 90)*sin(3*v)
    - 24576*(33*pw(v,4) - 107*pw(v,2) + 30)*sin(4*v) + (-3937883*pw(v,4) + 28223520*pw(v,2)
    - 21006720)*tan(v/2) + 24*v*(115673*pw(v,2) - 893360)/(cos(v) + 1)) / (6144*pw(v,7));
  b[4] = (39690*pw(v,3)*pw(sec(v/2),8) - 6615*pw(v,4)*tan(v/2)*pw(sec(v/2),8)
    + 1890*v*(239*pw(v,2) + 160)*pw(sec(v/2),6) - 1890*pw(v,2)*(41*pw(v,2)
    + 72)*tan(v/2)*pw(sec(v/2),6) + 756*v*(1471*pw(v,2) - 2160)*pw(sec(v/2),4)
    - 378*(561*pw(v,4) + 2968*pw(v,2) + 960)*tan(v/2)*pw(sec(v/2),4) + 84*v*(99661*pw(v,2)
    - 859120)*pw(sec(v/2),2) - 56*(26371*pw(v,4) - 61404*pw(v,2)
    - 289440)*tan(v/2)*pw(sec(v/2),2) - 51030*pw(v,3)*pw(csc(v/2),6)
    - 8505*pw(v,4)*cot(v/2)*pw(csc(v/2),6) - 503496*pw(v,3)*pw(csc(v/2),4)
    - 1701*pw(v,2)*(51*pw(v,2) + 80)*cot(v/2)*pw(csc(v/2),4) - 756*v*(7131*pw(v,2)
    - 18320)*pw(csc(v/2),2) - 189*(4913*pw(v,4) + 256*pw(v,2) - 5760)*cot(v/2)*pw(csc(v/2),2)
    - 92160*v*(373*pw(v,2) - 2140) - 245760*v*(60*pw(v,4) - 767*pw(v,2) + 1400)*cos(v)
    - 12288*v*(1829*pw(v,2) - 6620)*cos(2*v) - 884736*v*(5*pw(v,4) - 54*pw(v,2) + 70)*cos(3*v)
    - 24576*v*(61*pw(v,2) - 220)*cos(4*v) - 49152*v*(6*pw(v,4) - 65*pw(v,2) + 80)*cos(5*v)
    - 9*(2193517*pw(v,4) - 8002080*pw(v,2) + 2378880)*cot(v/2) + 245760*(287*pw(v,4)
    - 1321*pw(v,2) + 690)*sin(v) - 24576*(151*pw(v,4) - 2446*pw(v,2) + 1860)*sin(2*v)
    + 16384*(1211*pw(v,4) - 4317*pw(v,2) + 1530)*sin(3*v) - 49152*(5*pw(v,4) - 82*pw(v,2)
    + 60)*sin(4*v) + 49152*(27*pw(v,4) - 95*pw(v,2) + 30)*sin(5*v) + (-24636373*pw(v,4)
    + 185682720*pw(v,2) - 157806720)*tan(v/2)) / (24576*pw(v,7));
  b[5] = (119070*pw(v,3)*pw(sec(v/2),8) - 19845*pw(v,4)*tan(v/2)*pw(sec(v/2),8)
    + 5670*v*(233*pw(v,2) + 160)*pw(sec(v/2),6) - 45360*pw(v,2)*(5*pw(v,2)
    + 9)*tan(v/2)*pw(sec(v/2),6) + 30240*v*(97*pw(v,2) - 170)*pw(sec(v/2),4) - 126*(4501*pw(v,4)
    + 25800*pw(v,2) + 8640)*tan(v/2)*pw(sec(v/2),4) + 28*(-151573*pw(v,4) + 398400*pw(v,2)
    + 1745280)*tan(v/2)*pw(sec(v/2),2) + 153090*pw(v,3)*pw(csc(v/2),6)
    + 25515*pw(v,4)*cot(v/2)*pw(csc(v/2),6) + 1462860*pw(v,3)*pw(csc(v/2),4)
    + 2835*pw(v,2)*(89*pw(v,2) + 144)*cot(v/2)*pw(csc(v/2),4) + 3780*v*(4139*pw(v,2)
    - 10960)*pw(csc(v/2),2) + 63*(42779*pw(v,4) + 480*pw(v,2) - 51840)*cot(v/2)*pw(csc(v/2),2)
    + 61440*v*(400*pw(v,4) - 6273*pw(v,2) + 15540) + 184320*v*(737*pw(v,2) - 3260)*cos(v)
    + 184320*v*(150*pw(v,4) - 1739*pw(v,2) + 2660)*cos(2*v) + 368640*v*(61*pw(v,2)
    - 220)*cos(3*v) + 61440*v*(72*pw(v,4) - 779*pw(v,2) + 980)*cos(4*v) + 614400*v*(pw(v,2)
    - 4)*cos(5*v) + 30720*v*(4*pw(v,4) - 45*pw(v,2) + 60)*cos(6*v) + 27*(2129819*pw(v,4)
    - 7933600*pw(v,2) + 2405760)*cot(v/2) + 122880*(173*pw(v,4) - 3222*pw(v,2) + 3060)*sin(v)
    - 491520*(259*pw(v,4) - 1035*pw(v,2) + 450)*sin(2*v) + 8192*(451*pw(v,4) - 7365*pw(v,2)
    + 5490)*sin(3*v) - 24576*(809*pw(v,4) - 2860*pw(v,2) + 960)*sin(4*v) + 49152*(2*pw(v,4)
    - 35*pw(v,2) + 30)*sin(5*v) - 4096*(137*pw(v,4) - 510*pw(v,2) + 180)*sin(6*v)
    + (-71232167*pw(v,4) + 545068320*pw(v,2) - 484318080)*tan(v/2) + 4200*v*(11495*pw(v,2)
    - 101648)/(cos(v) + 1)) / (61440*pw(v,7));
  return b;
}

}  // namespace phasefit::detail
