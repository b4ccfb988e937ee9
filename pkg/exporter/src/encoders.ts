/**
 * Sentence encoders behind a common interface.
 *
 * "universal-sentence-encoder" is the real model (tfjs; needs network or a
 * local weight cache on first use). "hash-v1" is a deterministic offline
 * fallback so the export/verify plumbing can be exercised without any
 * model download; it is NOT a semantic embedding.
 */

export interface Encoder {
  id: string
  dim: number
  embed(texts: string[]): Promise<number[][]>
}

const FNV_OFFSET = 0xcbf29ce484222325n
const FNV_PRIME = 0x100000001b3n
const U64 = (1n << 64n) - 1n

export function fnv1a64(data: Buffer): bigint {
  let h = FNV_OFFSET
  for (const byte of data) {
    h = ((h ^ BigInt(byte)) * FNV_PRIME) & U64
  }
  return h
}

function hashEmbedOne(text: string, dim: number): number[] {
  const vec = new Array<number>(dim).fill(0)
  const words = text.split(/\s+/).filter((w) => w.length > 0)
  const grams: string[] = [...words]
  for (let i = 0; i + 1 < words.length; i++) {
    grams.push(words[i] + ' ' + words[i + 1])
  }
  for (const gram of grams) {
    const h = fnv1a64(Buffer.from(gram, 'utf-8'))
    const bucket = Number(h % BigInt(dim))
    const sign = h >> 63n === 0n ? 1 : -1
    vec[bucket] += sign
  }
  const norm = Math.sqrt(vec.reduce((acc, x) => acc + x * x, 0))
  return norm > 0 ? vec.map((x) => x / norm) : vec
}

export function hashEncoder(dim = 128): Encoder {
  return {
    id: `hash-v1-${dim}`,
    dim,
    async embed(texts: string[]): Promise<number[][]> {
      return texts.map((t) => hashEmbedOne(t, dim))
    },
  }
}

export async function useEncoder(): Promise<Encoder> {
  // lazy imports keep the offline paths free of the tfjs startup cost
  await import('@tensorflow/tfjs')
  const use = await import('@tensorflow-models/universal-sentence-encoder')
  let model: Awaited<ReturnType<typeof use.load>>
  try {
    model = await use.load()
  } catch (err) {
    throw new Error(
      `failed to load the universal-sentence-encoder model: ${(err as Error).message}`,
    )
  }
  return {
    id: 'universal-sentence-encoder',
    dim: 512,
    async embed(texts: string[]): Promise<number[][]> {
      const tensor = await model.embed(texts)
      const rows = (await tensor.array()) as number[][]
      tensor.dispose()
      return rows
    },
  }
}

export async function getEncoder(id: string, dim?: number): Promise<Encoder> {
  if (id === 'universal-sentence-encoder' || id === 'use') {
    return useEncoder()
  }
  if (id === 'hash-v1') {
    return hashEncoder(dim ?? 128)
  }
  throw new Error(`unknown model "${id}" (use universal-sentence-encoder or hash-v1)`)
}
