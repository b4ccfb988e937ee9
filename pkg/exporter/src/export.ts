import {
  EmbeddingRecord,
  Manifest,
  readPhrasesFile,
  sha256Hex,
  writeEmbeddingsFile,
} from './format'
import { Encoder } from './encoders'

const BATCH_SIZE = 64

/**
 * Read a phrase list, embed every text, and write the interchange file.
 * Output order is fixed by phrase_id regardless of batching.
 */
export async function exportEmbeddings(
  phrasesPath: string,
  outPath: string,
  encoder: Encoder,
): Promise<Manifest> {
  const phrases = readPhrasesFile(phrasesPath).sort((a, b) => a.phrase_id - b.phrase_id)
  const records: EmbeddingRecord[] = []
  for (let start = 0; start < phrases.length; start += BATCH_SIZE) {
    const batch = phrases.slice(start, start + BATCH_SIZE)
    const vectors = await encoder.embed(batch.map((p) => p.text))
    batch.forEach((phrase, i) => {
      const vector = vectors[i]
      if (vector.length !== encoder.dim) {
        throw new Error(
          `phrase_id ${phrase.phrase_id}: encoder returned dim ${vector.length}, expected ${encoder.dim}`,
        )
      }
      records.push({
        phrase_id: phrase.phrase_id,
        sha256: sha256Hex(phrase.text),
        dim: encoder.dim,
        vector,
      })
    })
  }
  return writeEmbeddingsFile(outPath, encoder.id, records)
}
