# -*- coding: utf-8 -*-

from setuptools import setup
import os
import os.path
import subprocess
import sys

f = open('README', 'r')
long_desc = f.read()
f.close()

basedir = os.path.dirname(os.path.join(os.getcwd(), sys.argv[0]))


def my_check_output(command):
    process = subprocess.Popen(command, shell=True, stdout=subprocess.PIPE,
                               stderr=subprocess.STDOUT,
                               universal_newlines=True)
    output = process.communicate()
    retcode = process.poll()
    if retcode:
        raise subprocess.CalledProcessError(retcode, command,
                                            output=output[0])
    return output


doc_files = []
if len(sys.argv) > 1 and sys.argv[1].startswith('bdist'):
    try:
        print("creating html documentation")
        my_check_output('cd doc; make html')
        doc_dir = os.path.join(basedir, 'doc', 'build', 'en', 'html')
        doc_files = [os.path.join(doc_dir, f) for f in os.listdir(doc_dir)
                     if not os.path.isdir(os.path.join(doc_dir, f))]
    except (subprocess.CalledProcessError, OSError):
        print("WARNING: documentation not created")

example_dir = os.path.join('share', 'tbk', 'examples')
example_files = [os.path.join(example_dir, f)
                 for f in sorted(os.listdir(example_dir))
                 if f.endswith('.json')]

setup(name='tbk',
      version='0.3',
      description='Exact computations with tropical toric vector bundles',
      long_description=long_desc,
      author='the tbk developers',
      platforms=['POSIX'],
      license='GNU GPL v3',
      keywords='tropical geometry toric vector bundle matroid bergman fan '
               'klyachko chern class permutahedral',
      classifiers=['Development Status :: 4 - Beta',
                   'Environment :: Console',
                   'Intended Audience :: Science/Research',
                   'License :: OSI Approved :: GNU General Public License (GPL)',
                   'Operating System :: POSIX',
                   'Programming Language :: Python :: 3',
                   'Topic :: Scientific/Engineering :: Mathematics', ],
      packages=['tbk'],
      package_dir={'tbk': os.path.join('src', 'tbk')},
      install_requires=['sympy'],
      test_suite='tests',
      data_files=[(example_dir, example_files),
                  (os.path.join('share', 'doc', 'tbk', 'html'), doc_files)],
      scripts=[os.path.join('scripts', 'tbk')],
      )
