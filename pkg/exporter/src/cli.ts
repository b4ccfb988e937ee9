#!/usr/bin/env node
import yargs from 'yargs'
import { hideBin } from 'yargs/helpers'
import { getEncoder } from './encoders'
import { exportEmbeddings } from './export'
import { verifyEmbeddingsFile } from './format'

async function main(): Promise<void> {
  await yargs(hideBin(process.argv))
    .scriptName('mf-export')
    .command(
      'export',
      'embed a phrase list and write the embeddings interchange file',
      (y) =>
        y
          .option('phrases', {
            type: 'string',
            demandOption: true,
            describe: 'phrase list JSONL ({"phrase_id", "text"} per line)',
          })
          .option('out', {
            type: 'string',
            demandOption: true,
            describe: 'output embeddings JSONL path',
          })
          .option('model', {
            type: 'string',
            default: 'universal-sentence-encoder',
            describe: 'encoder backend: universal-sentence-encoder | hash-v1',
          })
          .option('dim', {
            type: 'number',
            describe: 'vector width (hash-v1 only)',
          }),
      async (argv) => {
        const encoder = await getEncoder(argv.model, argv.dim)
        const manifest = await exportEmbeddings(argv.phrases, argv.out, encoder)
        process.stderr.write(
          `wrote ${manifest.phrase_count} vectors (model=${manifest.model}, dim=${manifest.dim}) to ${argv.out}\n`,
        )
      },
    )
    .command(
      'verify',
      'check an embeddings file against the interchange format',
      (y) =>
        y.option('file', {
          type: 'string',
          demandOption: true,
          describe: 'embeddings JSONL path',
        }),
      async (argv) => {
        const problems = verifyEmbeddingsFile(argv.file)
        if (problems.length > 0) {
          for (const problem of problems) {
            process.stderr.write(`${problem}\n`)
          }
          process.exitCode = 1
          return
        }
        process.stderr.write(`${argv.file}: ok\n`)
      },
    )
    .demandCommand(1)
    .strict()
    .fail((msg, err) => {
      process.stderr.write(`${msg ?? (err && err.message)}\n`)
      process.exit(err ? 1 : 2)
    })
    .parseAsync()
}

main().catch((err: Error) => {
  process.stderr.write(`${err.message}\n`)
  process.exit(1)
})
