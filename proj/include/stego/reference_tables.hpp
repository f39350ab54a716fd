#pragma once

// Reference data for the five-qubit perfect code: stabilizer generators,
// the single-qubit-error syndrome table, the single-error encoding table,
// and the six two-qubit-error encodings grouped by syndrome.

#include <array>
#include <cstddef>
#include <string_view>

namespace stego::reference {

inline constexpr std::array<std::string_view, 4> kGenerators = {
    "XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"};
inline constexpr std::string_view kLogicalX = "XXXXX";
inline constexpr std::string_view kLogicalZ = "ZZZZZ";

struct SyndromeEntry {
  std::string_view error;     // 5-qubit operator
  std::string_view syndrome;  // printed 4-bit label
};

// The sixteen correctable classes: identity plus every single-qubit error.
inline constexpr std::array<SyndromeEntry, 16> kSyndromeTable = {{
    {"IIIII", "0000"}, {"IIIIZ", "0001"}, {"IIZII", "0010"},
    {"IIIXI", "0011"}, {"IXIII", "0100"}, {"IIXII", "0101"},
    {"ZIIII", "0110"}, {"IIYII", "0111"}, {"XIIII", "1000"},
    {"IZIII", "1001"}, {"IIIIX", "1010"}, {"IIIIY", "1011"},
    {"IIIZI", "1100"}, {"IYIII", "1101"}, {"YIIII", "1110"},
    {"IIIYI", "1111"},
}};

struct SingleEncodingEntry {
  std::string_view ancilla;   // 4-qubit operator, optional leading '-'
  std::string_view cover;     // 1-qubit operator
  std::string_view encoded;   // 5-qubit encoded error
  std::string_view syndrome;  // printed 4-bit label
};

// Single-error encoding: ancilla/cover operator pairs whose encoded images
// are the sixteen correctable errors above. The ancilla/cover columns were
// produced by one particular encoding circuit; they are kept for reference
// and compared only structurally.
inline constexpr std::array<SingleEncodingEntry, 16> kSingleErrorTable = {{
    {"IIII", "I", "IIIII", "0000"},
    {"IIIX", "Z", "IIIIZ", "0001"},
    {"IIXI", "I", "IIZII", "0010"},
    {"IIXX", "I", "IIIXI", "0011"},
    {"IXII", "I", "IXIII", "0100"},
    {"IXZY", "Y", "IIXII", "0101"},
    {"ZXXI", "Z", "ZIIII", "0110"},
    {"-IXYY", "Y", "IIYII", "0111"},
    {"XIII", "I", "XIIII", "1000"},
    {"XZIX", "I", "IZIII", "1001"},
    {"XIXI", "X", "IIIIX", "1010"},
    {"XIXX", "Y", "IIIIY", "1011"},
    {"XXIZ", "X", "IIIZI", "1100"},
    {"XYIX", "I", "IYIII", "1101"},
    {"YXXI", "Z", "YIIII", "1110"},
    {"XXXY", "X", "IIIYI", "1111"},
}};

struct DoubleErrorEntry {
  std::string_view pre_image;  // 5-qubit ancilla (x) cover operator
  std::string_view encoded;    // 5-qubit two-qubit error
};

struct DoubleErrorGroup {
  std::string_view syndrome;  // printed 4-bit label shared by the group
  std::array<DoubleErrorEntry, 6> rows;
};

// The ninety two-qubit errors, grouped by syndrome. Row j of every group
// belongs to encoding j; together with the no-error row each encoding covers
// all sixteen syndromes exactly once.
//
// The encoded entry of group 0010, row 0 is reconstructed: the source table
// repeats the group 0001 value "XZIII" there, which is not a syndrome-0010
// operator. The replacement "ZXIII" is the unique weight-2 error with
// syndrome 0010 that is missing from the rest of the group.
inline constexpr std::array<DoubleErrorGroup, 15> kDoubleErrorGroups = {{
    {"0001",
     {{{"IZIXI", "XZIII"},
       {"IIZYY", "IXXII"},
       {"-ZIZYX", "ZIYII"},
       {"IIIXI", "IIZXI"},
       {"ZIIYY", "YIIYI"},
       {"-IZIYX", "IYIZI"}}}},
    {"0010",
     {{{"ZIXIZ", "ZXIII"},
       {"IZXZX", "IYIYI"},
       {"ZIXZY", "YIIZI"},
       {"IIXIX", "XIIIX"},
       {"IZXIY", "IZIIY"},
       {"IIXIZ", "IIIXZ"}}}},
    {"0011",
     {{{"ZZXXZ", "YYIII"},
       {"-ZIYYX", "ZIXII"},
       {"-IIYYY", "IXYII"},
       {"IZXXX", "IZIIX"},
       {"IIXXY", "XIIIY"},
       {"IIXXZ", "IIZIZ"}}}},
    {"0100",
     {{{"ZXIIZ", "ZIZII"},
       {"IXZZY", "IIYXI"},
       {"IXIZX", "XIIZI"},
       {"ZXIIY", "YIIIX"},
       {"IXIZZ", "IIIYY"},
       {"IXZZX", "IIXIZ"}}}},
    {"0101",
     {{{"IYIXI", "XYIII"},
       {"ZXIXZ", "ZIIXI"},
       {"IYIYX", "IZIZI"},
       {"IXIYI", "IIIYX"},
       {"-ZXIXX", "YIIIY"},
       {"IXIXZ", "IXIIZ"}}}},
    {"0110",
     {{{"IXXII", "IXZII"},
       {"IXYZY", "IIXXI"},
       {"-IYXZX", "IZIYI"},
       {"IXXZI", "IIIZX"},
       {"IYXIY", "IYIIY"},
       {"-IXYZX", "IIYIZ"}}}},
    {"0111",
     {{{"-ZYXXZ", "YZIII"},
       {"IXXXI", "IXIXI"},
       {"IXXYX", "XIIYI"},
       {"IYXXX", "IYIIX"},
       {"-IXXYZ", "IIIZY"},
       {"ZXXXI", "ZIIIZ"}}}},
    {"1000",
     {{{"XZZZY", "IYXII"},
       {"XIZIZ", "IIYYI"},
       {"XIIZX", "IXIZI"},
       {"XIIIX", "IIZIX"},
       {"XIIIY", "IIIXY"},
       {"XZIIZ", "IZIIZ"}}}},
    {"1001",
     {{{"-YIZYX", "YIYII"},
       {"-YIIYY", "ZIIYI"},
       {"XIZXZ", "IIXZI"},
       {"XIIXX", "IIIXX"},
       {"XIIXY", "IIZIY"},
       {"XIIXZ", "XIIIZ"}}}},
    {"1010",
     {{{"YIXIZ", "YXIII"},
       {"-XZYZY", "IYYII"},
       {"XIXII", "XIZII"},
       {"XZXII", "IZIXI"},
       {"XIYIZ", "IIXYI"},
       {"-YIXZY", "ZIIZI"}}}},
    {"1011",
     {{{"-YZXXZ", "ZYIII"},
       {"-YIYYX", "YIXII"},
       {"XZXXI", "IZZII"},
       {"XIXXI", "XIIXI"},
       {"XIXYX", "IXIYI"},
       {"-XIYXZ", "IIYZI"}}}},
    {"1100",
     {{{"XXIII", "XXIII"},
       {"-XYZZY", "IZXII"},
       {"YXIIZ", "YIZII"},
       {"-YXIIY", "ZIIIX"},
       {"XXZZI", "IIYIY"},
       {"XYIIZ", "IYIIZ"}}}},
    {"1101",
     {{{"XXZYY", "XIXII"},
       {"YXIXZ", "YIIXI"},
       {"XXIYX", "IIZYI"},
       {"XXZYZ", "IIYIX"},
       {"YXIXX", "ZIIIY"},
       {"XXIYY", "IIIZZ"}}}},
    {"1110",
     {{{"XYYZY", "IZYII"},
       {"XYXII", "IYIXI"},
       {"XXXZX", "IIZZI"},
       {"XXXIX", "IXIIX"},
       {"XXYZI", "IIXIY"},
       {"-XXXZY", "IIIYZ"}}}},
    {"1111",
     {{{"YYXXZ", "ZZIII"},
       {"-XXYYY", "XIYII"},
       {"XYXXI", "IYZII"},
       {"XXYYZ", "IIXIX"},
       {"XXXXY", "IXIIY"},
       {"YXXXI", "YIIIZ"}}}},
}};

// Index of the row inside each group that forms the highlighted encoding.
inline constexpr std::size_t kHighlightedEncoding = 1;

}  // namespace stego::reference
