/** Schedule grid: sessions laid out by location x time, with per-channel
 * markers and score badges on the recommended ones.
 */

import type { Lists } from "./state.js";
import type { SessionInfo } from "./types.js";

export const CONTEXT_MARKER = "●"; // filled circle
export const RELATIONS_MARKER = "▲"; // filled triangle

export function formatScore(score: number): string {
  return score.toFixed(3);
}

export function renderScheduleGrid(
  container: HTMLElement,
  sessions: SessionInfo[],
  lists: Lists,
  onSelect: (sessionId: string) => void,
): void {
  const doc = container.ownerDocument;
  container.textContent = "";

  const contextScores = new Map(
    lists["social-context"].map((r) => [r.session_id, r.score]),
  );
  const relationScores = new Map(
    lists["social-relations"].map((r) => [r.session_id, r.score]),
  );

  const frameEnd = Math.max(720, ...sessions.map((s) => s.end));
  const locations = [...new Set(sessions.map((s) => s.location))].sort();

  for (const location of locations) {
    const row = doc.createElement("div");
    row.className = "grid-row";

    const label = doc.createElement("div");
    label.className = "grid-location";
    label.textContent = location;
    row.appendChild(label);

    const lane = doc.createElement("div");
    lane.className = "grid-lane";
    for (const session of sessions.filter((s) => s.location === location)) {
      const block = doc.createElement("button");
      block.type = "button";
      block.className = "session-block";
      block.dataset.sessionId = session.session_id;
      block.style.left = `${(session.start / frameEnd) * 100}%`;
      block.style.width = `${((session.end - session.start) / frameEnd) * 100}%`;
      block.title = `${session.session_id} by ${session.presenter} (${session.start}-${session.end})`;

      let text = session.session_id;
      const contextScore = contextScores.get(session.session_id);
      if (contextScore !== undefined) {
        block.classList.add("rec-context");
        text += ` ${CONTEXT_MARKER}${formatScore(contextScore)}`;
      }
      const relationScore = relationScores.get(session.session_id);
      if (relationScore !== undefined) {
        block.classList.add("rec-relations");
        text += ` ${RELATIONS_MARKER}${formatScore(relationScore)}`;
      }
      block.textContent = text;
      block.addEventListener("click", () => onSelect(session.session_id));
      lane.appendChild(block);
    }
    row.appendChild(lane);
    container.appendChild(row);
  }
}
