#include "layout.hpp"
#include "negglue/strengths.hpp"

namespace negglue {

namespace {

using detail::Layout;
using detail::TraceBuilder;
using C = GadgetCategory;

constexpr Side kN = Side::North;
constexpr Side kE = Side::East;
constexpr Side kS = Side::South;
constexpr Side kW = Side::West;

void overlay(GadgetLibrary& lib) {
  Layout l({0, 0}, {"II.........",
                    "Ihacbbbffde",
                    "IBacbbbTTde",
                    "IBTTTTTTTTT",
                    ".BTTTTTTTTT"});
  l.bond({0, 3}, kE, "t1");
  l.bond({0, 2}, kE, "h^");
  l.bond({1, 3}, kE, "d");
  l.bond({1, 4}, kE, "d");
  l.bond({1, 1}, kW, "h");
  l.bond({1, 1}, kS, "h*");
  l.bond({1, 1}, kN, "i1");
  l.bond({2, 1}, kW, "q2");
  l.bond({2, 2}, kS, "i2");
  l.bond({2, 1}, kE, "q1");
  l.bond({3, 2}, kS, "i3");
  l.bond({3, 1}, kE, "q3");
  l.bond({4, 2}, kS, "w");
  l.bond({5, 2}, kS, "e");
  l.bond({6, 1}, kE, "i1");
  l.bond({7, 1}, kS, "f");
  l.bond({8, 1}, kS, "f*");
  l.bond({8, 1}, kE, "q2");
  l.bond({9, 2}, kS, "i2");
  l.bond({9, 1}, kE, "q1");
  l.bond({10, 2}, kS, "i3");
  l.face({10, 1}, kE, "q3");
  TraceBuilder t(lib, l, "overlay");
  t.piece('B', "overlay.tape_end", C::Buffer);
  t.piece('T', "overlay.tape", C::TapeSection, "F");
  t.piece('I', "overlay.initiator", C::OverlayInitiator);
  t.piece('h', "overlay.end_tile", C::OverlayHelper);
  t.piece('a', "overlay.domino_q2", C::OverlayHelper);
  t.piece('c', "overlay.domino_q1", C::OverlayHelper);
  t.piece('b', "overlay.block", C::OverlayHelper);
  t.piece('f', "overlay.bit_F", C::OverlayHelper, "F");
  t.piece('d', "overlay.domino_q2", C::OverlayHelper);
  t.piece('e', "overlay.domino_q1", C::OverlayHelper);
  t.start('B', 'T', 12);
  t.combine('I', 10, "t1+h^");
  t.combine('h', 10, "h+h*+i1");
  t.combine('a', 10, "q2+i2");
  t.combine('c', 10, "q1+i3");
  t.combine('b', 10, "q3+w+e");
  t.combine('f', 10, "f+f*+i1");
  t.combine('d', 10, "q2+i2");
  t.combine('e', 10, "q1+i3");
  t.finish();
}

void read(GadgetLibrary& lib) {
  Layout l({-1, -1}, {".pppf",
                      "jjiif",
                      "j.RRR",
                      "jkRRR",
                      "HHHHH"});
  l.bond({1, 2}, kS, "n");
  l.bond({2, 2}, kS, "T");
  l.bond({3, 2}, kS, "F");
  l.bond({1, 2}, kW, "M");
  l.bond({1, 1}, kN, "F");
  l.bond({2, 1}, kN, "F");
  l.bond({3, 1}, kN, "Q");
  l.bond({0, 2}, kS, "K");
  l.bond({-1, 2}, kS, "J1");
  l.bond({-1, 2}, kE, "A1");
  l.bond({0, 0}, kE, "J2");
  l.bond({0, 0}, kN, "O1");
  l.bond({1, 0}, kN, "A2");
  l.bond({2, 0}, kN, "A2");
  l.bond({2, 0}, kE, "J3");
  l.bond({2, -1}, kE, "J3");
  TraceBuilder t(lib, l, "read");
  t.piece('H', "read.overlay", C::TapeSection, "F");
  t.piece('R', "read.gadget_F", C::Read, "F");
  t.piece('k', "read.helper_K", C::ReadHelper);
  t.piece('j', "read.helper_J", C::ReadHelper);
  t.piece('i', "read.info_F", C::InfoBlock, "F");
  t.piece('p', "read.helper_A", C::ReadHelper);
  t.piece('f', "read.helper_Q", C::ReadHelper);
  t.start('H', 'R', 10, "n+T+F");
  t.combine('k', 10, "K+M");
  t.combine('j', 10, "J1+A1");
  t.combine('i', 10, "F+F+J2");
  t.combine('p', 11, "A2+A2+O1");
  t.combine('f', 12, "J3+J3+Q");
  t.detach("R", 9, "F+F+M+n+T+F+Q");
  t.finish();
}

struct WalkLabels {
  std::string hold_a, hold_mid, hold_b;  // old unit on the host
  std::string info_a, info_b;            // walker on the old unit
  std::string foot;                      // walker on the host
  std::string new_info, new_side, new_host;
  std::string helper1_host, helper1_info, helper2, helper2_neg;
};

/// Walker steps from one unit to the next `stride` cells along the host.
/// Returns the layout with all pieces drawn at their final positions.
Layout walk_layout(const WalkLabels& w, int stride) {
  int s = stride;
  std::vector<std::string> rows(4, std::string(s + 5, '.'));
  auto put = [&](int x, int y, char c) { rows[y][x + 1] = c; };
  for (int x = 0; x <= s + 2; ++x) put(x, 0, 'W');
  put(s + 2, 1, 'W');
  put(s + 2, 2, 'W');
  for (int x = -1; x <= 1; ++x) {
    put(x, 1, 'U');
    put(x, 2, 'U');
  }
  for (int x = 2; x <= s; ++x) put(x, 2, 'a');
  put(s - 1, 1, 'b');
  put(s, 1, 'b');
  put(s + 1, 1, 'i');
  put(s + 1, 2, 'i');
  for (int x = -1; x <= s + 3; ++x) put(x, 3, 'H');
  Layout l({-1, 0}, rows);
  l.bond({0, 0}, kS, w.info_a);
  l.bond({1, 0}, kS, w.info_b);
  l.bond({s + 2, 2}, kS, w.foot);
  l.bond({s + 1, 0}, kS, w.new_info);
  l.bond({s + 2, 1}, kW, w.new_side);
  l.bond({s, 0}, kS, w.helper2_neg);
  l.bond({s + 1, 2}, kS, w.new_host);
  l.bond({2, 2}, kS, w.helper1_host);
  l.bond({s, 2}, kE, w.helper1_info);
  l.bond({2, 2}, kW, "D");
  l.bond({s - 1, 1}, kS, w.helper2);
  l.bond({s, 1}, kS, w.helper2);
  if (!w.hold_a.empty()) l.bond({-1, 2}, kS, w.hold_a);
  if (!w.hold_mid.empty()) l.bond({0, 2}, kS, w.hold_mid);
  if (!w.hold_b.empty()) l.bond({1, 2}, kS, w.hold_b);
  return l;
}

struct WalkNames {
  std::string trace, prefix;
  int special = 0;
};

void walk_trace(GadgetLibrary& lib, const WalkNames& n, const WalkLabels& w, int stride, bool mirrored,
                const std::vector<std::pair<int, std::string>>& sums) {
  Layout l = walk_layout(w, stride);
  if (mirrored) l.mirror();
  TraceBuilder t(lib, l, n.trace);
  const std::string& p = n.prefix;
  t.piece('H', p + ".path", C::TapeSection, "F", n.special);
  t.piece('U', p + ".unit_F", C::InfoBlock, "F", n.special);
  t.piece('W', p + ".walker_F", C::Walker, "F", n.special);
  t.piece('i', p + ".info_F", C::InfoBlock, "F", n.special);
  t.piece('a', p + ".helper_1", C::WalkerHelper, "none", n.special);
  t.piece('b', p + ".helper_2", C::WalkerHelper, "none", n.special);
  t.start('H', 'U', sums[0].first, sums[0].second);
  t.combine('W', sums[1].first, sums[1].second);
  t.combine('i', sums[2].first, sums[2].second);
  t.combine('a', sums[3].first, sums[3].second);
  t.detach("U", sums[4].first, sums[4].second);
  t.combine('b', sums[5].first, sums[5].second);
  t.detach("W", sums[6].first, sums[6].second);
  t.finish();
}

WalkLabels forward_walk_labels() {
  WalkLabels w;
  w.hold_a = "A2";
  w.hold_mid = "J2";
  w.hold_b = "A2";
  w.info_a = "F";
  w.info_b = "F";
  w.foot = "J1";
  w.new_info = "F";
  w.new_side = "O2";
  w.new_host = "X";
  w.helper1_host = "J1";
  w.helper1_info = "Z1";
  w.helper2 = "Z2";
  w.helper2_neg = "D";
  return w;
}

const std::vector<std::pair<int, std::string>> kForwardWalkSums{
    {12, ""},         {10, "F+F+J1"},  {10, "F+O2+X"},          {10, "J1+Z1+D"},
    {7, "J2+A2+A2+F+F+D"}, {11, "Z2+Z2+D"}, {9, "F+O2+J1+D"}};

void walks(GadgetLibrary& lib) {
  walk_trace(lib, {"walk-forward", "walk"}, forward_walk_labels(), 3, false, kForwardWalkSums);

  for (int turn = 0; turn < 2; ++turn) {
    bool left = turn == 0;
    std::string side = left ? "W" : "E";
    WalkLabels w;
    w.hold_a = "X";
    w.hold_mid = "G1";
    w.info_a = "C";
    w.info_b = "F";
    w.foot = side;
    w.new_info = "F";
    w.new_side = "O3";
    w.new_host = "X";
    w.helper1_host = "G1";
    w.helper1_info = "Z3";
    w.helper2 = "Z4";
    w.helper2_neg = "Q";
    std::vector<std::pair<int, std::string>> sums{
        {10, ""},         {10, "C+F+" + side},    {10, "F+O3+X"},  {10, "G1+Z3+D"},
        {8, "X+G1+C+F+D"}, {14, "Z4+Z4+Q"}, {9, left ? "W+O3+F+Q" : "F+O3+E+Q"}};
    walk_trace(lib, {left ? "walk-left" : "walk-right", left ? "walkL" : "walkR"}, w, 3, false, sums);
  }

  for (int k = 1; k <= 4; ++k) {
    int stride = k % 2 ? 4 : 5;
    walk_trace(lib, {"special-walk-" + std::to_string(k), "swalk" + std::to_string(k), k}, forward_walk_labels(),
               stride, k > 2, kForwardWalkSums);
  }
}

struct ExtendLabels {
  std::string variant;
  std::string info_on_top_a, info_on_top_b, info_side;
  std::string gadget_host, gadget_block;
  std::string unit_host_a, unit_host_b;
  std::string block1_host, block2_host, block_pair;
  std::string helper1_a, helper1_b;
};

void extend_trace(GadgetLibrary& lib, const std::string& trace, const std::string& prefix, int special,
                  const ExtendLabels& x, int gap, bool mirrored,
                  const std::vector<std::pair<int, std::string>>& sums) {
  int g = gap;
  std::vector<std::string> rows(6, std::string(g + 6, '.'));
  auto put = [&](int px, int py, char c) { rows[py + 1][px + 1] = c; };
  put(0, -1, 'o');
  put(1, -1, 'o');
  for (int px = 0; px <= 2; ++px) put(px, 0, 'E');
  put(2, 1, 'E');
  put(2, 2, 'E');
  for (int px = 3; px <= 3 + g; ++px) put(px, 2, 'E');
  put(-1, 1, 'v');
  put(-1, 2, 'v');
  for (int py = 1; py <= 2; ++py)
    for (int px = 0; px <= 1; ++px) put(px, py, 'U');
  for (int py = 3; py <= 4; ++py)
    for (int px = -1; px <= 2 + g; ++px) put(px, py, 'H');
  put(3 + g, 3, 'p');
  put(3 + g, 4, 'q');
  put(4 + g, 3, 'r');
  put(4 + g, 4, 'r');
  Layout l({-1, -1}, rows);
  l.bond({0, 2}, kS, x.unit_host_a);
  l.bond({1, 2}, kS, x.unit_host_b);
  l.bond({0, 0}, kS, x.info_on_top_a);
  l.bond({1, 0}, kS, x.info_on_top_b);
  l.bond({2, 1}, kW, x.info_side);
  l.bond({2, 2}, kS, x.gadget_host);
  l.bond({3 + g, 2}, kS, x.gadget_block);
  l.bond({0, -1}, kS, x.helper1_a);
  l.bond({1, -1}, kS, x.helper1_b);
  l.bond({-1, 1}, kE, "V0");
  l.bond({-1, 2}, kE, "V0");
  l.bond({-1, 2}, kS, "D");
  l.bond({3 + g, 3}, kW, x.block1_host);
  l.bond({3 + g, 4}, kW, x.block2_host);
  l.bond({3 + g, 3}, kS, x.block_pair);
  l.bond({3 + g, 3}, kE, x.block_pair);
  l.bond({3 + g, 4}, kE, x.block_pair);
  if (mirrored) l.mirror();
  TraceBuilder t(lib, l, trace);
  t.piece('H', prefix + ".path", C::TapeSection, "none", special);
  t.piece('U', prefix + ".unit_" + x.variant, C::InfoBlock, x.variant, special);
  t.piece('E', prefix + ".gadget_" + x.variant, C::Extender, x.variant, special);
  t.piece('p', prefix + ".block_1", C::ExtenderHelper, "none", special);
  t.piece('q', prefix + ".block_2", C::ExtenderHelper, "none", special);
  t.piece('o', prefix + ".helper_1", C::ExtenderHelper, "none", special);
  t.piece('v', prefix + ".helper_2", C::ExtenderHelper, "none", special);
  t.piece('r', prefix + ".block_3", C::ExtenderHelper, "none", special);
  t.start('H', 'U', sums[0].first, sums[0].second);
  t.combine('E', sums[1].first, sums[1].second);
  t.combine('p', sums[2].first, sums[2].second);
  t.combine('q', sums[3].first, sums[3].second);
  t.combine('o', sums[4].first, sums[4].second);
  t.combine('v', sums[5].first, sums[5].second);
  t.detach("UEov", sums[6].first, sums[6].second);
  t.combine('r', sums[7].first, sums[7].second);
  t.finish();
}

void extends(GadgetLibrary& lib) {
  ExtendLabels f{"F", "B", "C", "F", "p", "X", "J1", "X", "H1", "H2", "P2", "O3", "V1"};
  std::vector<std::pair<int, std::string>> fs{
      {10, ""},       {10, "B+C+F+p"}, {10, "X+H1"},           {17, "P2+H2"},
      {16, "O3+V1"}, {11, "V0+V0+D"}, {7, "X+p+J1+X+D"}, {18, "P2+P2"}};
  extend_trace(lib, "extend-forward", "extend", 0, f, 0, false, fs);

  ExtendLabels left{"L", "B", "C", "L", "X", "X", "G1", "X", "G1", "G1", "P1", "V3", "V3"};
  extend_trace(lib, "extend-left", "extendL", 0, left, 0, false,
               {{10, ""},
                {10, "B+C+L+X"},
                {10, "X+G1"},
                {17, "P1+G1"},
                {18, "V3+V3"},
                {11, "V0+V0+D"},
                {7, "X+X+G1+X+D"},
                {18, "P1+P1"}});

  ExtendLabels right{"R", "B", "C", "R", "X", "X", "G1", "X", "G3", "G3", "P2", "O4", "V3"};
  extend_trace(lib, "extend-right", "extendR", 0, right, 0, false,
               {{10, ""},
                {10, "B+C+R+X"},
                {10, "X+G3"},
                {17, "P2+G3"},
                {16, "O4+V3"},
                {11, "V0+V0+D"},
                {7, "X+X+G1+X+D"},
                {18, "P2+P2"}});

  for (int k = 1; k <= 4; ++k)
    extend_trace(lib, "special-extend-" + std::to_string(k), "sextend" + std::to_string(k), k, f, k % 2 ? 1 : 2,
                 k > 2, fs);
}

void reduce(GadgetLibrary& lib) {
  // The leaving section S is one column wide; T is the next section.
  Layout l({1, -1}, {".Rm.",
                     "RRm.",
                     "RSTT",
                     "aSTT",
                     "bSTT",
                     "ffn.",
                     ".fn."});
  l.bond({2, 1}, kE, "e");
  l.bond({2, 2}, kE, "u1");
  l.bond({2, 3}, kE, "u2");
  l.bond({1, 1}, kE, "A2");
  l.bond({2, 0}, kS, "U");
  l.bond({1, 2}, kN, "u1");
  l.bond({1, 2}, kE, "u3");
  l.bond({1, 3}, kN, "u2");
  l.bond({1, 3}, kE, "u4");
  l.bond({1, 4}, kN, "s");
  l.bond({2, 4}, kN, "s");
  l.bond({2, -1}, kE, "s");
  l.bond({2, 0}, kE, "m");
  l.bond({3, 0}, kS, "o");
  l.bond({2, 4}, kE, "s");
  l.bond({2, 5}, kE, "m");
  l.bond({3, 4}, kN, "o");
  TraceBuilder t(lib, l, "reduce");
  t.piece('T', "reduce.next_section", C::TapeSection, "F");
  t.piece('S', "reduce.read_section", C::TapeSection, "F");
  t.piece('R', "reduce.gadget", C::Reducer);
  t.piece('a', "reduce.helper_u1", C::ReducerHelper);
  t.piece('b', "reduce.helper_u2", C::ReducerHelper);
  t.piece('f', "reduce.filler", C::ReducerHelper);
  t.piece('m', "reduce.repulsor_top", C::ReducerHelper);
  t.piece('n', "reduce.repulsor_bottom", C::ReducerHelper);
  t.start('T', 'S', 19);
  t.combine('R', 10, "A2+U");
  t.combine('a', 16, "u1+u3");
  t.combine('b', 16, "u2+u4");
  t.combine('f', 16, "s+s");
  t.combine('m', 11, "s+m+o");
  t.combine('n', 11, "s+m+o");
  t.detach("SRabfmn", 9, "e+u1+u2+o+o");
  t.finish();
}

void fill_lines(GadgetLibrary& lib) {
  Layout l({-3, -2}, {".FFhcc..",
                      "HHHhstyz",
                      "HHHHHHHH",
                      "HHHguuvw",
                      "..ggu..."});
  l.bond({-2, -2}, kS, "H");
  l.bond({-1, -2}, kS, "I");
  l.bond({-1, -2}, kE, "J1");
  l.bond({0, -1}, kS, "s");
  l.bond({0, -2}, kE, "b");
  l.bond({0, -1}, kE, "s");
  l.bond({-1, 2}, kN, "u4");
  l.bond({0, 1}, kN, "u2");
  l.bond({0, 1}, kE, "s");
  l.bond({0, 2}, kE, "S");
  l.bond({1, -1}, kS, "s");
  l.bond({1, -1}, kN, "b");
  l.bond({1, -1}, kE, "s");
  l.bond({2, -1}, kS, "G1");
  l.bond({2, -1}, kE, "Y0");
  l.bond({2, -1}, kN, "a");
  l.bond({3, -1}, kS, "G1");
  l.bond({3, -1}, kE, "Y2");
  l.bond({4, -1}, kS, "G1");
  l.bond({1, 1}, kN, "X");
  l.bond({2, 1}, kN, "X");
  l.bond({2, 1}, kE, "Y0");
  l.bond({3, 1}, kN, "G3");
  l.bond({3, 1}, kE, "Y6");
  l.bond({4, 1}, kN, "G3");
  TraceBuilder t(lib, l, "fill-lines");
  t.piece('H', "fill.last_section", C::TapeSection, "F");
  t.piece('F', "fill.initiator", C::FillInitiator);
  t.piece('h', "fill.helper_J", C::FillBlock);
  t.piece('g', "fill.helper_u", C::FillBlock);
  t.piece('s', "fill.s_block", C::FillBlock);
  t.piece('t', "fill.top_start", C::FillBlock);
  t.piece('y', "fill.top_0", C::FillBlock);
  t.piece('z', "fill.top_line", C::FillBlock);
  t.piece('u', "fill.under_start", C::FillBlock);
  t.piece('v', "fill.under_0", C::FillBlock);
  t.piece('w', "fill.under_line", C::FillBlock);
  t.piece('c', "fill.cap", C::FillBlock);
  t.start('H', 'F', 13, "H+I");
  t.combine('h', 16, "J1+s");
  t.combine('g', 16, "u4+u2");
  t.combine('s', 16, "s+s");
  t.combine('t', 16, "s+G1");
  t.combine('y', 17, "Y0+G1");
  t.combine('u', 17, "s+X+S+X");
  t.combine('v', 17, "Y0+G3");
  t.combine('c', 10, "b+b+a");
  t.combine('z', 17, "Y2+G1");
  t.combine('w', 17, "Y6+G3");
  t.finish();
}

void fill_left(GadgetLibrary& lib) {
  Layout l({0, -3}, {"...H.",
                     "..wH.",
                     "HabHn",
                     "HHHHs",
                     "Hcdes"});
  l.bond({0, -1}, kE, "Y2");
  l.bond({1, -1}, kS, "G1");
  l.bond({1, -1}, kE, "Y2");
  l.face({1, -1}, kN, "Y3");
  l.bond({2, -1}, kS, "G1");
  l.face({2, -1}, kE, "Y2");
  l.bond({2, -1}, kN, "Y3");
  l.bond({2, -2}, kE, "G4");
  l.bond({0, 1}, kE, "Y6");
  for (int x = 1; x <= 3; ++x) {
    l.bond({x, 1}, kN, "G3");
    l.bond({x, 1}, kE, "Y6");
  }
  l.bond({4, 0}, kW, "G2");
  l.bond({4, 0}, kN, "Y7");
  l.bond({4, -1}, kW, "G2");
  TraceBuilder t(lib, l, "fill-left");
  t.piece('H', "fillL.path", C::TapeSection, "L");
  t.piece('a', "fillL.top", C::FillBlock, "L");
  t.piece('b', "fillL.top", C::FillBlock, "L");
  t.piece('w', "fillL.top_corner", C::FillBlock, "L");
  t.piece('c', "fillL.under", C::FillBlock, "L");
  t.piece('d', "fillL.under", C::FillBlock, "L");
  t.piece('e', "fillL.under", C::FillBlock, "L");
  t.piece('s', "fillL.under_corner", C::FillBlock, "L");
  t.piece('n', "fillL.under_side", C::FillBlock, "L");
  t.start('H', 'a', 17, "Y2+G1");
  t.combine('b', 17, "Y2+G1");
  t.combine('w', 17, "Y3+G4");
  t.combine('c', 17, "Y6+G3");
  t.combine('d', 17, "Y6+G3");
  t.combine('e', 17, "Y6+G3");
  t.combine('s', 17, "Y6+G2");
  t.combine('n', 17, "Y7+G2");
  t.finish();
}

void fill_right(GadgetLibrary& lib) {
  Layout l({0, -1}, {"Habcn",
                     "HHHHn",
                     "HuvHe",
                     "..wH.",
                     "...H."});
  l.bond({0, -1}, kE, "Y2");
  for (int x = 1; x <= 3; ++x) {
    l.bond({x, -1}, kS, "G1");
    l.bond({x, -1}, kE, "Y2");
  }
  l.bond({4, 0}, kW, "G2");
  l.bond({4, 0}, kS, "Y5");
  l.bond({4, 1}, kW, "G2");
  l.bond({0, 1}, kE, "Y6");
  for (int x = 1; x <= 2; ++x) {
    l.bond({x, 1}, kN, "G2");
    l.face({x, 1}, kE, "Y6");
    l.face({x, 1}, kS, "Y9");
  }
  l.bond({1, 1}, kE, "Y6");
  l.bond({2, 1}, kS, "Y9");
  l.bond({2, 2}, kE, "G4");
  TraceBuilder t(lib, l, "fill-right");
  t.piece('H', "fillR.path", C::TapeSection, "R");
  t.piece('a', "fillR.top", C::FillBlock, "R");
  t.piece('b', "fillR.top", C::FillBlock, "R");
  t.piece('c', "fillR.top", C::FillBlock, "R");
  t.piece('n', "fillR.top_corner", C::FillBlock, "R");
  t.piece('e', "fillR.top_side", C::FillBlock, "R");
  t.piece('u', "fillR.under", C::FillBlock, "R");
  t.piece('v', "fillR.under", C::FillBlock, "R");
  t.piece('w', "fillR.under_corner", C::FillBlock, "R");
  t.start('H', 'a', 17, "Y2+G1");
  t.combine('b', 17, "Y2+G1");
  t.combine('c', 17, "Y2+G1");
  t.combine('n', 17, "Y2+G2");
  t.combine('e', 17, "Y5+G2");
  t.combine('u', 17, "Y6+G2");
  t.combine('v', 17, "Y6+G2");
  t.combine('w', 17, "Y9+G4");
  t.finish();
}

}  // namespace

GadgetLibrary build_default_library() {
  GadgetLibrary lib;
  lib.tau = 10;
  lib.strengths = default_strengths();
  overlay(lib);
  read(lib);
  walks(lib);
  extends(lib);
  reduce(lib);
  fill_lines(lib);
  fill_left(lib);
  fill_right(lib);
  return lib;
}

}  // namespace negglue
