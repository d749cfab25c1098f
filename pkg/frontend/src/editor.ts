/** Context editors: ratings, availability slots, contacts.
 *
 * Each editor is a small form of draft rows submitted whole via PUT with
 * the last seen snapshot version declared. Service-side validation
 * failures (422) surface inline under the form that caused them; a 409
 * means someone else changed the data first and triggers the reload
 * banner instead.
 */

import { ApiError } from "./api.js";
import type { ContactInput, SlotInput } from "./types.js";

export interface EditorCallbacks {
  declaredVersion: () => number | undefined;
  onWritten: (version: number) => void;
  onConflict: (message: string) => void;
}

type RowSpec = { name: string; placeholder: string; kind: "text" | "number" }[];

function addRow(tbody: HTMLElement, spec: RowSpec): void {
  const doc = tbody.ownerDocument;
  const row = doc.createElement("tr");
  for (const field of spec) {
    const cell = doc.createElement("td");
    const input = doc.createElement("input");
    input.type = field.kind;
    input.name = field.name;
    input.placeholder = field.placeholder;
    cell.appendChild(input);
    row.appendChild(cell);
  }
  const removeCell = doc.createElement("td");
  const remove = doc.createElement("button");
  remove.type = "button";
  remove.textContent = "x";
  remove.className = "remove-row";
  remove.addEventListener("click", () => row.remove());
  removeCell.appendChild(remove);
  row.appendChild(removeCell);
  tbody.appendChild(row);
}

function rowValues(tbody: HTMLElement): Record<string, string>[] {
  const out: Record<string, string>[] = [];
  for (const row of Array.from(tbody.querySelectorAll("tr"))) {
    const values: Record<string, string> = {};
    let filled = false;
    for (const input of Array.from(row.querySelectorAll("input"))) {
      values[input.name] = input.value.trim();
      if (input.value.trim() !== "") filled = true;
    }
    if (filled) out.push(values);
  }
  return out;
}

export interface Editor {
  element: HTMLElement;
  errorBox: HTMLElement;
  clearRows: () => void;
}

function buildEditor(
  doc: Document,
  id: string,
  title: string,
  spec: RowSpec,
  submitLabel: string,
  extraButtons: { label: string; className: string; onClick: (tbody: HTMLElement) => void }[],
  onSubmit: (rows: Record<string, string>[], errorBox: HTMLElement) => Promise<void>,
): Editor {
  const section = doc.createElement("section");
  section.id = id;
  section.className = "editor";

  const heading = doc.createElement("h3");
  heading.textContent = title;
  section.appendChild(heading);

  const table = doc.createElement("table");
  const tbody = doc.createElement("tbody");
  table.appendChild(tbody);
  section.appendChild(table);
  addRow(tbody, spec);

  const controls = doc.createElement("div");
  controls.className = "editor-controls";

  const add = doc.createElement("button");
  add.type = "button";
  add.textContent = "+ row";
  add.className = "add-row";
  add.addEventListener("click", () => addRow(tbody, spec));
  controls.appendChild(add);

  for (const extra of extraButtons) {
    const button = doc.createElement("button");
    button.type = "button";
    button.textContent = extra.label;
    button.className = extra.className;
    button.addEventListener("click", () => extra.onClick(tbody));
    controls.appendChild(button);
  }

  const errorBox = doc.createElement("div");
  errorBox.className = "editor-errors";

  const submit = doc.createElement("button");
  submit.type = "button";
  submit.textContent = submitLabel;
  submit.className = "submit";
  submit.addEventListener("click", () => {
    errorBox.textContent = "";
    void onSubmit(rowValues(tbody), errorBox);
  });
  controls.appendChild(submit);

  section.appendChild(controls);
  section.appendChild(errorBox);
  return {
    element: section,
    errorBox,
    clearRows: () => {
      tbody.textContent = "";
      addRow(tbody, spec);
    },
  };
}

function showErrors(errorBox: HTMLElement, error: unknown, callbacks: EditorCallbacks): void {
  if (error instanceof ApiError && error.status === 409) {
    callbacks.onConflict(error.message);
    return;
  }
  const messages = error instanceof ApiError && error.detail.length
    ? error.detail
    : [String(error)];
  const doc = errorBox.ownerDocument;
  for (const message of messages) {
    const line = doc.createElement("p");
    line.className = "error";
    line.textContent = message;
    errorBox.appendChild(line);
  }
}

export function buildRatingsEditor(
  doc: Document,
  submit: (ratings: Record<string, number>, version?: number) => Promise<{ version: number }>,
  callbacks: EditorCallbacks,
  track: <T>(p: Promise<T>) => Promise<T>,
): Editor {
  return buildEditor(
    doc,
    "ratings-editor",
    "My tag ratings (replaces all)",
    [
      { name: "tag", placeholder: "research keyword", kind: "text" },
      { name: "rating", placeholder: "1-5", kind: "number" },
    ],
    "Save ratings",
    [],
    (rows, errorBox) =>
      track(
        (async () => {
          const ratings: Record<string, number> = {};
          for (const row of rows) {
            ratings[row.tag] = Number(row.rating);
          }
          const response = await submit(ratings, callbacks.declaredVersion());
          callbacks.onWritten(response.version);
        })().catch((error) => showErrors(errorBox, error, callbacks)),
      ),
  );
}

export function buildAvailabilityEditor(
  doc: Document,
  submit: (slots: SlotInput[], version?: number) => Promise<{ version: number }>,
  callbacks: EditorCallbacks,
  track: <T>(p: Promise<T>) => Promise<T>,
): Editor {
  return buildEditor(
    doc,
    "availability-editor",
    "My availability (replaces all)",
    [
      { name: "location", placeholder: "venue", kind: "text" },
      { name: "start", placeholder: "from (min)", kind: "number" },
      { name: "end", placeholder: "to (min)", kind: "number" },
    ],
    "Save availability",
    [
      {
        label: "clear all",
        className: "clear-rows",
        onClick: (tbody) => {
          tbody.textContent = "";
        },
      },
    ],
    (rows, errorBox) =>
      track(
        (async () => {
          const slots = rows.map((row) => ({
            location: row.location,
            start: Number(row.start),
            end: Number(row.end),
          }));
          const response = await submit(slots, callbacks.declaredVersion());
          callbacks.onWritten(response.version);
        })().catch((error) => showErrors(errorBox, error, callbacks)),
      ),
  );
}

export function buildContactsEditor(
  doc: Document,
  submit: (contacts: ContactInput[], version?: number) => Promise<{ version: number }>,
  callbacks: EditorCallbacks,
  track: <T>(p: Promise<T>) => Promise<T>,
): Editor {
  return buildEditor(
    doc,
    "contacts-editor",
    "My contacts (replaces all)",
    [
      { name: "other", placeholder: "participant id", kind: "text" },
      { name: "frequency", placeholder: "meetings", kind: "number" },
      { name: "duration", placeholder: "minutes together", kind: "number" },
    ],
    "Save contacts",
    [],
    (rows, errorBox) =>
      track(
        (async () => {
          const contacts = rows.map((row) => ({
            other: row.other,
            frequency: Number(row.frequency),
            duration: Number(row.duration),
          }));
          const response = await submit(contacts, callbacks.declaredVersion());
          callbacks.onWritten(response.version);
        })().catch((error) => showErrors(errorBox, error, callbacks)),
      ),
  );
}
