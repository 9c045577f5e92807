#!/usr/bin/env node
// Minimal z3 CLI over the WASM build: reads SMT-LIB2 from stdin and prints the
// solver's output. Accepts -T:SECONDS for a hard wall-clock limit like z3 -T.
const fs = require('fs');
const path = require('path');

// let require() find node_modules next to the repo root or the caller's cwd
module.paths.push(path.join(process.cwd(), 'node_modules'));

let hardLimit = 0;
for (const arg of process.argv.slice(2)) {
  const m = /^-T:(\d+)$/.exec(arg);
  if (m) hardLimit = parseInt(m[1], 10);
}
const script = fs.readFileSync(0, 'utf8');
(async () => {
  const { init } = require('z3-solver');
  const { Z3 } = await init();
  if (hardLimit > 0) {
    // soft solver timeout slightly above the hard one so "timeout" wins
    Z3.global_param_set('timeout', String(hardLimit * 1000 + 1000));
    setTimeout(() => {
      process.stdout.write('timeout\n');
      process.exit(0);
    }, hardLimit * 1000).unref();
    setTimeout(() => {}, (hardLimit + 1) * 1000); // keep the loop alive
  }
  const cfg = Z3.mk_config();
  const ctx = Z3.mk_context(cfg);
  const start = Date.now();
  const out = await Z3.eval_smtlib2_string(ctx, script);
  let text = out.endsWith('\n') || out === '' ? out : out + '\n';
  // the soft solver timeout surfaces as "unknown"; report it like z3 -T does
  if (hardLimit > 0 && /^unknown\b/.test(text) && Date.now() - start >= hardLimit * 1000) {
    text = 'timeout\n';
  }
  process.stdout.write(text);
  process.exit(0);
})().catch(err => {
  const msg = String((err && err.message) || err).replace(/"/g, "'");
  process.stdout.write(`(error "${msg}")\n`);
  process.exit(1);
});
