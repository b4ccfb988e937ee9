/**
 * Embeddings interchange format shared with the summarizer core.
 *
 * JSON Lines, UTF-8. First line is a manifest; every following line is one
 * record, sorted by phrase_id:
 *
 *   {"model": "...", "dim": 512, "phrase_count": 42}
 *   {"phrase_id": 0, "sha256": "...", "dim": 512, "vector": [ ... ]}
 *
 * The sha256 is the hex digest of the exact phrase text (UTF-8 bytes), the
 * handshake that lets the loader reject stale exports.
 */

import { createHash } from 'node:crypto'
import { readFileSync, writeFileSync } from 'node:fs'

export interface Manifest {
  model: string
  dim: number
  phrase_count: number
}

export interface EmbeddingRecord {
  phrase_id: number
  sha256: string
  dim: number
  vector: number[]
}

export interface PhraseEntry {
  phrase_id: number
  text: string
}

const HEX64 = /^[0-9a-f]{64}$/

export function sha256Hex(text: string): string {
  return createHash('sha256').update(Buffer.from(text, 'utf-8')).digest('hex')
}

/** Parse the phrase-list handshake file written by `minuteforge inspect --phrases-out`. */
export function readPhrasesFile(path: string): PhraseEntry[] {
  const entries: PhraseEntry[] = []
  const lines = readFileSync(path, 'utf-8').split('\n')
  lines.forEach((line, index) => {
    if (!line.trim()) return
    let obj: unknown
    try {
      obj = JSON.parse(line)
    } catch (err) {
      throw new Error(`phrases file line ${index + 1}: invalid JSON (${(err as Error).message})`)
    }
    const rec = obj as Record<string, unknown>
    if (typeof rec.phrase_id !== 'number' || typeof rec.text !== 'string') {
      throw new Error(`phrases file line ${index + 1}: expected {"phrase_id", "text"}`)
    }
    entries.push({ phrase_id: rec.phrase_id, text: rec.text })
  })
  return entries
}

export function writeEmbeddingsFile(
  path: string,
  model: string,
  records: EmbeddingRecord[],
): Manifest {
  const dim = records.length > 0 ? records[0].dim : 0
  const manifest: Manifest = { model, dim, phrase_count: records.length }
  const sorted = [...records].sort((a, b) => a.phrase_id - b.phrase_id)
  const lines = [JSON.stringify(manifest)]
  for (const rec of sorted) {
    lines.push(JSON.stringify(rec))
  }
  writeFileSync(path, lines.join('\n') + '\n', 'utf-8')
  return manifest
}

/** Validate an interchange file; returns a list of human-readable problems. */
export function verifyEmbeddingsFile(path: string): string[] {
  const problems: string[] = []
  const lines = readFileSync(path, 'utf-8')
    .split('\n')
    .filter((l) => l.trim().length > 0)
  if (lines.length === 0) {
    return ['file is empty: missing manifest line']
  }

  let manifest: Manifest | null = null
  try {
    const head = JSON.parse(lines[0]) as Record<string, unknown>
    if (
      typeof head.model !== 'string' ||
      typeof head.dim !== 'number' ||
      typeof head.phrase_count !== 'number'
    ) {
      problems.push('first line is not a valid manifest')
    } else {
      manifest = head as unknown as Manifest
    }
  } catch {
    problems.push('first line is not valid JSON')
  }

  let previousId = -Infinity
  const records = lines.slice(1)
  records.forEach((line, index) => {
    const label = `record ${index}`
    let rec: EmbeddingRecord
    try {
      rec = JSON.parse(line) as EmbeddingRecord
    } catch {
      problems.push(`${label}: invalid JSON (NaN/Infinity tokens are not allowed)`)
      return
    }
    if (typeof rec.phrase_id !== 'number') {
      problems.push(`${label}: missing phrase_id`)
      return
    }
    const id = `phrase_id ${rec.phrase_id}`
    if (rec.phrase_id <= previousId) {
      problems.push(`${id}: records out of order`)
    }
    previousId = rec.phrase_id
    if (typeof rec.sha256 !== 'string' || !HEX64.test(rec.sha256)) {
      problems.push(`${id}: sha256 is not a 64-char lowercase hex digest`)
    }
    if (!Array.isArray(rec.vector) || rec.vector.length !== rec.dim) {
      problems.push(`${id}: vector length does not match dim`)
    } else if (rec.vector.some((x) => typeof x !== 'number' || !Number.isFinite(x))) {
      problems.push(`${id}: non-finite vector component`)
    }
    if (manifest && rec.dim !== manifest.dim) {
      problems.push(`${id}: dim ${rec.dim} differs from manifest dim ${manifest.dim}`)
    }
  })

  if (manifest && records.length !== manifest.phrase_count) {
    problems.push(
      `manifest declares ${manifest.phrase_count} records, file has ${records.length}`,
    )
  }
  return problems
}
