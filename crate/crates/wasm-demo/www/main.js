import init, { analyze, locate, presentation, compare, examples } from "./pkg/eqos_wasm.js";

const $ = (id) => document.getElementById(id);
const SCALE = 40;
let forms = [];

function show(target, run) {
  const el = $(target);
  try {
    const value = run();
    el.classList.remove("error");
    return value;
  } catch (e) {
    el.textContent = String(e);
    el.classList.add("error");
    return null;
  }
}

function fillPresets(select, items, textarea, pick) {
  for (const { name } of items) select.add(new Option(name, name));
  select.onchange = () => { textarea.value = items.find((i) => i.name === select.value).text; };
  select.value = pick ?? items[0].name;
  select.onchange();
}

function draw() {
  const c = $("plot"), g = c.getContext("2d");
  const w = c.width, h = c.height, cx = w / 2, cy = h / 2;
  g.clearRect(0, 0, w, h);
  g.strokeStyle = "#ddd";
  g.beginPath(); g.moveTo(0, cy); g.lineTo(w, cy); g.moveTo(cx, 0); g.lineTo(cx, h); g.stroke();
  g.strokeStyle = "#036";
  g.fillStyle = "#036";
  forms.forEach(([a, b, c0], i) => {
    const r = Math.max(w, h) / SCALE;
    let p, q;
    if (Math.abs(b) > Math.abs(a)) {
      p = [-r, (-c0 + a * r) / b]; q = [r, (-c0 - a * r) / b];
    } else {
      p = [(-c0 + b * r) / a, -r]; q = [(-c0 - b * r) / a, r];
    }
    const px = (pt) => [cx + pt[0] * SCALE, cy - pt[1] * SCALE];
    g.beginPath(); g.moveTo(...px(p)); g.lineTo(...px(q)); g.stroke();
    const n = Math.hypot(a, b), foot = [-c0 * a / (n * n), -c0 * b / (n * n)];
    const [lx, ly] = px([foot[0] + 0.3 * a / n, foot[1] + 0.3 * b / n]);
    g.fillText(String(i + 1), lx, ly);
  });
}

function runAnalyze() {
  const r = show("analysis", () => JSON.parse(analyze($("arr-text").value)));
  if (!r) return;
  forms = r.dimension === 2 ? r.forms : [];
  draw();
  $("analysis").textContent = [
    `hyperplanes: ${r.hyperplanes}, dimension ${r.dimension}, rank ${r.rank}`,
    `faces: ${r.faces}`,
    `chambers (${r.chambers.length}): ${r.chambers.join(" ")}`,
    `OS Hilbert function: ${r.os_hilbert.join(", ")}`,
    `equivariant Hilbert function: ${r.eq_hilbert.join(", ")}`,
    `VG dimension: ${r.vg_dimension}`,
  ].join("\n");
}

function runPresent() {
  const degree = Number($("pres-degree").value);
  const r = show("presentation", () => JSON.parse(presentation($("arr-text").value, $("ring").value, degree)));
  if (!r) return;
  const lines = ["generators:", ...r.generators.map((g) => `  ${g.poly}    [${g.from}]`), "Groebner basis:", ...r.groebner.map((g) => `  ${g}`)];
  if (r.hilbert) lines.push(`Hilbert function: ${r.hilbert.join(", ")}`);
  if (r.total_dimension !== undefined) lines.push(`dimension: ${r.total_dimension}`);
  $("presentation").textContent = lines.join("\n");
}

function runCompare() {
  const degree = Number($("cmp-degree").value);
  const r = show("comparison", () => JSON.parse(compare($("left").value, $("right").value, degree)));
  if (!r) return;
  $("comparison").textContent = [
    r.verdict,
    r.detail,
    `Hilbert: ${r.hilbert[0].join(",")} | ${r.hilbert[1].join(",")}`,
    `fingerprint left:  ${r.fingerprint[0]}`,
    `fingerprint right: ${r.fingerprint[1]}`,
  ].join("\n");
}

$("plot").onmousemove = (ev) => {
  if (!forms.length) return;
  const c = $("plot"), rect = c.getBoundingClientRect();
  const x = (ev.clientX - rect.left - c.width / 2) / SCALE;
  const y = -(ev.clientY - rect.top - c.height / 2) / SCALE;
  try {
    $("sign").textContent = `${JSON.parse(locate($("arr-text").value, x, y)).sign_vector} at (${x.toFixed(2)}, ${y.toFixed(2)})`;
  } catch (e) {
    $("sign").textContent = String(e);
  }
};

await init();
const ex = JSON.parse(examples());
fillPresets($("arr-preset"), ex.arrangements, $("arr-text"), "falk_a");
fillPresets($("left-preset"), ex.ideals, $("left"), "falk_j");
fillPresets($("right-preset"), ex.ideals, $("right"), "falk_j_prime");
$("arr-preset").addEventListener("change", runAnalyze);
$("analyze").onclick = runAnalyze;
$("present").onclick = runPresent;
$("compare").onclick = runCompare;
runAnalyze();
