//! Cell text of the reference arithmetic tables, one string per row with
//! cells separated by whitespace. Kept exactly as published, including the
//! cells the audits flag.

pub(crate) const TABLE_4: [&str; 9] = [
    "2_φ 3_φ 4_φ 5_φ 6_φ 7_φ 8_φ 9_φ 1_φ",
    "3_φ 4_φ 5_φ 6_φ 7_φ 8_φ 9_φ 1_φ 2_φ",
    "4_φ 5_φ 6_φ 7_φ 8_φ 9_φ 1_φ 2_φ 3_φ",
    "5_φ 6_φ 7_φ 8_φ 9_φ 1_φ 2_φ 3_φ 4_φ",
    "6_φ 7_φ 8_φ 9_φ 1_φ 2_φ 3_φ 4_φ 5_φ",
    "7_φ 8_φ 9_φ 1_φ 2_φ 3_φ 4_φ 5_φ 6_φ",
    "8_φ 9_φ 1_φ 2_φ 3_φ 4_φ 5_φ 6_φ 7_φ",
    "9_φ 1_φ 2_φ 3_φ 4_φ 5_φ 6_φ 7_φ 8_φ",
    "1_φ 2_φ 3_φ 4_φ 5_φ 6_φ 7_φ 8_φ 9_φ",
];

pub(crate) const TABLE_5: [&str; 9] = [
    "9_φ 1_φ 2_φ 3_φ 4_φ 5_φ 6_φ 7_φ 8_φ",
    "8_φ 9_φ 1_φ 2_φ 3_φ 4_φ 5_φ 6_φ 7_φ",
    "7_φ 8_φ 9_φ 1_φ 2_φ 3_φ 4_φ 5_φ 6_φ",
    "6_φ 7_φ 8_φ 9_φ 1_φ 2_φ 3_φ 4_φ 5_φ",
    "5_φ 6_φ 7_φ 8_φ 9_φ 1_φ 2_φ 3_φ 4_φ",
    "4_φ 5_φ 6_φ 7_φ 8_φ 9_φ 1_φ 2_φ 3_φ",
    "3_φ 4_φ 5_φ 6_φ 7_φ 8_φ 9_φ 1_φ 2_φ",
    "2_φ 3_φ 4_φ 5_φ 6_φ 7_φ 8_φ 9_φ 1_φ",
    "1_φ 2_φ 3_φ 4_φ 5_φ 6_φ 7_φ 8_φ 9_φ",
];

pub(crate) const TABLE_6: [&str; 9] = [
    "-9_φ -8_φ -7_φ -6_φ -5_φ -4_φ -3_φ -2_φ -1_φ",
    "-1_φ -9_φ -8_φ -7_φ -6_φ -5_φ -4_φ -3_φ -2_φ",
    "-2_φ -1_φ -9_φ -8_φ -7_φ -6_φ -5_φ -4_φ -3_φ",
    "-3_φ -2_φ -1_φ -9_φ -8_φ -7_φ -6_φ -5_φ -4_φ",
    "-4_φ -3_φ -2_φ -1_φ -9_φ -8_φ -7_φ -6_φ -5_φ",
    "-5_φ -4_φ -3_φ -2_φ -1_φ -9_φ -8_φ -7_φ -6_φ",
    "-6_φ -5_φ -4_φ -3_φ -2_φ -1_φ -9_φ -8_φ -7_φ",
    "-7_φ -6_φ -5_φ -4_φ -3_φ -2_φ -1_φ -9_φ -8_φ",
    "-8_φ -7_φ -6_φ -5_φ -4_φ -3_φ -2_φ -1_φ -9_φ",
];

pub(crate) const TABLE_7: [&str; 9] = [
    "1_φ 2_φ 3_φ 4_φ 5_φ 6_φ 7_φ 8_φ 9_φ",
    "5_φ 1_φ 6_φ 2_φ 7_φ 3_φ 8_φ 7_φ 9_φ",
    "∅ ∅ 4_φ;1_φ;7_φ ∅ ∅ 5_φ;2_φ;8_φ ∅ ∅ 3_φ;9_φ;6_φ",
    "7_φ 5_φ 3_φ 1_φ 8_φ 6_φ 4_φ 2_φ 9_φ",
    "2_φ 4_φ 6_φ 8_φ 1_φ 3_φ 5_φ 7_φ 9_φ",
    "∅ ∅ 5_φ;2_φ;8_φ ∅ ∅ 4_φ;1_φ;7_φ ∅ ∅ 3_φ;9_φ;6_φ",
    "4_φ 8_φ 3_φ 7_φ 2_φ 6_φ 1_φ 5_φ 9_φ",
    "8_φ 7_φ 6_φ 5_φ 4_φ 3_φ 2_φ 1_φ 9_φ",
    "∅ ∅ ∅ ∅ ∅ ∅ ∅ ∅ Z_φ",
];

pub(crate) const TABLE_8: [&str; 9] = [
    "1_φ 2_φ 3_φ 4_φ 5_φ 6_φ 7_φ 8_φ 9_φ",
    "2_φ 4_φ 6_φ 8_φ 1_φ 3_φ 5_φ 7_φ 9_φ",
    "3_φ 6_φ 9_φ 3_φ 6_φ 9_φ 3_φ 6_φ 9_φ",
    "4_φ 8_φ 3_φ 7_φ 2_φ 6_φ 1_φ 5_φ 9_φ",
    "5_φ 1_φ 6_φ 2_φ 7_φ 3_φ 8_φ 4_φ 9_φ",
    "6_φ 3_φ 9_φ 6_φ 3_φ 9_φ 6_φ 3_φ 9_φ",
    "7_φ 5_φ 3_φ 1_φ 8_φ 6_φ 4_φ 2_φ 9_φ",
    "8_φ 7_φ 6_φ 5_φ 4_φ 3_φ 2_φ 1_φ 9_φ",
    "9_φ 9_φ 9_φ 9_φ 9_φ 9_φ 9_φ 9_φ 9_φ",
];

pub(crate) const TABLE_9: [&str; 9] = [
    "1_φ 1_φ 1_φ 1_φ 1_φ 1_φ 1_φ 1_φ 1_φ 1_φ 1_φ 1_φ 1_φ 1_φ",
    "4_φ 8_φ 7_φ 5_φ 1_φ 2_φ 4_φ 8_φ 7_φ 5_φ 1_φ 2_φ 4_φ 8_φ",
    "9_φ 9_φ 9_φ 9_φ 9_φ 9_φ 9_φ 9_φ 9_φ 9_φ 9_φ 9_φ 9_φ 9_φ",
    "7_φ 1_φ 4_φ 7_φ 1_φ 4_φ 7_φ 1_φ 4_φ 7_φ 1_φ 4_φ 7_φ 1_φ",
    "7_φ 8_φ 4_φ 2_φ 1_φ 5_φ 7_φ 8_φ 4_φ 2_φ 1_φ 5_φ 7_φ 8_φ",
    "9_φ 9_φ 9_φ 9_φ 9_φ 9_φ 9_φ 9_φ 9_φ 9_φ 9_φ 9_φ 9_φ 9_φ",
    "4_φ 1_φ 7_φ 4_φ 1_φ 7_φ 4_φ 1_φ 7_φ 4_φ 1_φ 7_φ 4_φ 1_φ",
    "1_φ 8_φ 1_φ 8_φ 1_φ 8_φ 1_φ 8_φ 1_φ 8_φ 1_φ 8_φ 1_φ 8_φ",
    "9_φ 9_φ 9_φ 9_φ 9_φ 9_φ 9_φ 9_φ 9_φ 9_φ 9_φ 9_φ 9_φ 9_φ",
];
