import codecs
from setuptools import find_packages
from setuptools import setup

install_requires = [
    'numpy>=1.16.0',
    'sympy>=1.7',
]

test_requires = [
    'pytest',
]

setup(name='tracetensor',
      version='0.1.0',
      description='Exact-arithmetic tensor trace identities and '
                  'Cayley-Hamilton relations for matrices',
      long_description=codecs.open('README.md', 'r', encoding='utf-8').read(),
      long_description_content_type='text/markdown',
      license='MIT License',
      packages=find_packages(exclude=['tests', 'tests.*']),
      install_requires=install_requires,
      test_requires=test_requires,
      entry_points={
          'console_scripts': ['tracetensor = tracetensor.cli:main'],
      })
