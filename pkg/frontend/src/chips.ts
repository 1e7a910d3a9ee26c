import { interestColor } from "./palette.js";
import type { Interest } from "./types.js";

/** The What explanation: top-5 interest chips at the top of the page, plus
 * the on-demand WHAT-IF? button next to them. */
export function renderInterestChips(
  container: HTMLElement,
  interests: Interest[],
  onWhatIf: () => void,
): void {
  container.replaceChildren();
  const row = document.createElement("div");
  row.className = "chip-row";

  for (const interest of interests) {
    const chip = document.createElement("span");
    chip.className = "chip";
    chip.dataset.label = interest.label;
    chip.dataset.colorIndex = String(interest.color_index);
    chip.style.backgroundColor = interestColor(interest.color_index);
    chip.textContent = `${interest.label} (${interest.weight.toFixed(2)})`;
    row.appendChild(chip);
  }

  const button = document.createElement("button");
  button.className = "whatif-btn";
  button.textContent = "WHAT-IF?";
  button.addEventListener("click", onWhatIf);
  row.appendChild(button);

  container.appendChild(row);
}
