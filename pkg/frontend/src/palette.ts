// One fixed hue per interest palette slot (color_index 0..4). The engine
// assigns the slot; every view (chip, band segment, keyword highlight, bar)
// must resolve the same slot to the same hue.
export const INTEREST_COLORS = [
  "#d62828", // slot 0
  "#1b7f3b", // slot 1
  "#2456c4", // slot 2
  "#c77700", // slot 3
  "#7b2cbf", // slot 4
];

export function interestColor(colorIndex: number | null): string {
  if (colorIndex === null || colorIndex < 0 || colorIndex >= INTEREST_COLORS.length) {
    return "#666666";
  }
  return INTEREST_COLORS[colorIndex];
}

// What-if recommendation statuses. Three visible hues (kept / new / dropped)
// plus a muted tone for publications absent on both sides.
export const STATUS_COLORS: Record<string, string> = {
  "unchanged-recommended": "#1b7f3b",
  "newly-recommended": "#2456c4",
  "no-longer-recommended": "#d62828",
  "unchanged-absent": "#bbbbbb",
};
