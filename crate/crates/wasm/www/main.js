import init, { farey_tree, braid, family } from "./pkg/lorenz_wasm.js";

const SVG = "http://www.w3.org/2000/svg";
const $ = (id) => document.getElementById(id);

function el(name, attrs, text) {
  const node = document.createElementNS(SVG, name);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  if (text !== undefined) node.textContent = text;
  return node;
}

function clear(svg) {
  while (svg.firstChild) svg.removeChild(svg.firstChild);
}

function attempt(errorId, f) {
  $(errorId).textContent = "";
  try {
    f();
  } catch (e) {
    $(errorId).textContent = String(e);
  }
}

// Each new word sits between the two words it was built from; x is its rank
// in the deepest level, y the level where it first appears.
function drawTree() {
  const side = $("tree-side").value;
  const depth = Number($("tree-depth").value);
  $("tree-depth-value").textContent = depth;
  const tree = JSON.parse(farey_tree(side, depth));
  const svg = $("tree-svg");
  clear(svg);

  const last = tree.levels[tree.levels.length - 1].words;
  const width = svg.clientWidth || 1000;
  const rowHeight = 300 / (depth + 1);
  const x = new Map(last.map((w, i) => [w, (i + 0.5) * width / last.length]));
  const born = new Map();
  tree.levels.forEach((level, d) => level.words.forEach((w) => { if (!born.has(w)) born.set(w, d); }));
  const y = (w) => 20 + born.get(w) * rowHeight;

  tree.levels.forEach((level, d) => {
    if (d === 0) return;
    level.words.forEach((w, i) => {
      if (born.get(w) !== d) return;
      // connect to the younger of the two neighbours it was built between
      const around = [level.words[i - 1], level.words[i + 1]].filter((v) => v !== undefined && born.get(v) < d);
      around.sort((a, b) => born.get(b) - born.get(a));
      if (around.length) {
        svg.appendChild(el("line", { x1: x.get(around[0]), y1: y(around[0]), x2: x.get(w), y2: y(w), stroke: "#bbb" }));
      }
    });
  });
  const fontSize = Math.max(7, Math.min(12, (width / last.length) / 4));
  for (const w of last) {
    const label = el("text", {
      x: x.get(w), y: y(w) + 4, "text-anchor": "middle", "font-size": fontSize,
      "font-family": "monospace", cursor: "pointer",
    }, w);
    label.addEventListener("click", () => {
      $("braid-words").value = w;
      attempt("braid-error", drawBraid);
    });
    svg.appendChild(label);
  }
}

// Strand i leaves position i at the top and arrives at perm[i] at the bottom.
function drawBraid() {
  const data = JSON.parse(braid($("braid-words").value));
  const svg = $("braid-svg");
  clear(svg);
  const width = svg.clientWidth || 1000;
  const n = data.strands;
  const step = width / (n + 1);
  const top = 60, bottom = 220;
  const colour = (i) => (i < data.left_strands ? "#1f5fa8" : "#c0392b");

  // draw the R strands first so the L strands pass over them
  const order = [...Array(n).keys()].sort((a, b) => (b < data.left_strands) - (a < data.left_strands));
  for (const i of order) {
    const x1 = step * (i + 1), x2 = step * data.permutation[i];
    const path = `M ${x1} ${top} C ${x1} ${(top + bottom) / 2}, ${x2} ${(top + bottom) / 2}, ${x2} ${bottom}`;
    svg.appendChild(el("path", { d: path, fill: "none", stroke: "#fcfcfc", "stroke-width": 6 }));
    svg.appendChild(el("path", { d: path, fill: "none", stroke: colour(i), "stroke-width": 2 }));
  }
  const fontSize = Math.max(7, Math.min(12, step / 3));
  data.labels.forEach((w, i) => {
    const x = step * (i + 1);
    svg.appendChild(el("text", {
      x, y: top - 8, "font-size": fontSize, "font-family": "monospace",
      transform: `rotate(-60 ${x} ${top - 8})`,
    }, w));
    svg.appendChild(el("circle", { cx: x, cy: top, r: 2.5, fill: colour(i) }));
    svg.appendChild(el("circle", { cx: x, cy: bottom, r: 2.5, fill: "#555" }));
  });

  const facts = [
    `strands ${n}`,
    `permutation [${data.permutation.join(",")}]`,
    `crossings ${data.crossings}`,
    `components ${data.components}`,
  ];
  if (data.genus !== null) facts.push(`genus ${data.genus}`);
  if (data.braid_index !== null) facts.push(`braid index ${data.braid_index}`);
  if (data.torus_candidates.length) {
    facts.push("same invariants as " + data.torus_candidates.map(([p, q]) => `T(${p},${q})`).join(", "));
  }
  facts.push(`artin word ${data.artin_word || "(empty)"}`);
  $("braid-info").innerHTML = facts.map((f) => `<div>${f}</div>`).join("");
}

let lastOrbit = null;

function drawFamily() {
  const out = $("family-out");
  out.innerHTML = "";
  lastOrbit = null;
  const data = JSON.parse(family(
    Number($("family-id").value), Number($("family-k").value), Number($("family-n").value),
    $("family-mirror").checked,
  ));
  const inst = data.instance, rep = inst.report, cert = data.certificate;
  lastOrbit = data.orbit;
  const rows = [
    ["X", inst.pair.x],
    ["Y", `${inst.pair.y} = m(${inst.pair.s_parent})`],
    ["S", inst.s],
    ["(X, Y) * S", inst.product],
    ["L-maximal form", data.l_maximal_product],
    ["p, q, k, r", `${rep.p}, ${rep.q}, ${rep.k}, ${rep.r}`],
    ["verdict", rep.verdict],
    ["shape", cert.kind],
  ];
  const table = document.createElement("table");
  for (const [k, v] of rows) {
    const tr = table.insertRow();
    tr.insertCell().textContent = k;
    const cell = tr.insertCell();
    cell.className = "mono";
    cell.textContent = v;
  }
  out.appendChild(table);

  const clauses = document.createElement("table");
  for (const c of cert.clauses) {
    const tr = clauses.insertRow();
    const mark = tr.insertCell();
    mark.textContent = c.passed ? "✓" : "✗";
    mark.className = c.passed ? "pass" : "fail";
    tr.insertCell().textContent = c.clause;
  }
  const verdict = document.createElement("p");
  verdict.textContent = cert.issued
    ? `T(${cert.p},${cert.q})-shaped and hyperbolic, conditional on Morton's conjecture.`
    : "Certificate not issued.";
  out.appendChild(clauses);
  out.appendChild(verdict);
}

async function main() {
  await init();
  for (let id = 1; id <= 10; id++) $("family-id").add(new Option(String(id), String(id)));

  $("tree-side").addEventListener("change", () => attempt("tree-error", drawTree));
  $("tree-depth").addEventListener("input", () => attempt("tree-error", drawTree));
  $("braid-go").addEventListener("click", () => attempt("braid-error", drawBraid));
  $("braid-words").addEventListener("keydown", (e) => { if (e.key === "Enter") attempt("braid-error", drawBraid); });
  for (const id of ["family-id", "family-k", "family-n", "family-mirror"]) {
    $(id).addEventListener("change", () => attempt("family-error", drawFamily));
  }
  $("family-braid").addEventListener("click", () => {
    if (!lastOrbit) return;
    $("braid-words").value = lastOrbit;
    attempt("braid-error", drawBraid);
    $("braid-panel").scrollIntoView({ behavior: "smooth" });
  });

  attempt("tree-error", drawTree);
  attempt("braid-error", drawBraid);
  attempt("family-error", drawFamily);
}

main();
