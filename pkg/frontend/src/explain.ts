/** Explanation panel: which gate admitted a session, the gate readings,
 * the availability slot that matched, and the relation kinds as chips.
 */

import { formatScore } from "./grid.js";
import type { RecommendationInfo } from "./types.js";

const GATE_LABELS: [keyof RecommendationInfo["explanation"]["gate_values"], string][] = [
  ["pearson", "similarity"],
  ["tie_strength", "tie strength"],
  ["degree_centrality", "centrality"],
];

export function renderExplanation(
  container: HTMLElement,
  sessionId: string | null,
  recs: RecommendationInfo[],
): void {
  const doc = container.ownerDocument;
  container.textContent = "";
  if (sessionId === null) {
    const hint = doc.createElement("p");
    hint.className = "hint";
    hint.textContent = "Select a session to see why it was recommended.";
    container.appendChild(hint);
    return;
  }

  const matching = recs.filter((r) => r.session_id === sessionId);
  const title = doc.createElement("h3");
  title.textContent = `Why ${sessionId}?`;
  container.appendChild(title);

  if (matching.length === 0) {
    const none = doc.createElement("p");
    none.className = "hint";
    none.textContent = "Not recommended under the current gates.";
    container.appendChild(none);
    return;
  }

  for (const rec of matching) {
    const card = doc.createElement("div");
    card.className = `explanation-card ${rec.channel}`;

    const head = doc.createElement("div");
    head.className = "explanation-head";
    head.textContent = `${rec.channel} - score ${formatScore(rec.score)}`;
    card.appendChild(head);

    const gates = doc.createElement("ul");
    gates.className = "gate-values";
    for (const [key, label] of GATE_LABELS) {
      const value = rec.explanation.gate_values[key];
      if (value === null || value === undefined) continue;
      const item = doc.createElement("li");
      item.textContent = `${label}: ${formatScore(value)}`;
      gates.appendChild(item);
    }
    card.appendChild(gates);

    const slot = rec.explanation.matched_slot;
    const matched = doc.createElement("p");
    matched.className = "matched-slot";
    matched.textContent = `you are free at ${slot.location} from ${slot.start} to ${slot.end}`;
    card.appendChild(matched);

    const chips = doc.createElement("div");
    chips.className = "relation-chips";
    for (const kind of rec.explanation.relation_kinds) {
      const chip = doc.createElement("span");
      chip.className = "chip";
      chip.textContent = kind;
      chips.appendChild(chip);
    }
    card.appendChild(chips);

    container.appendChild(card);
  }
}
